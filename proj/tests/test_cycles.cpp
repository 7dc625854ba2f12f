#include <doctest.h>

#include <chrono>

#include "rcover/cycles.hpp"
#include "rcover/oracle.hpp"
#include "rcover/random.hpp"
#include "support/gen.hpp"

using namespace rcover;
using namespace rcover::cycles;

TEST_CASE("verify_tight_cycle") {
  const auto red4 = monochromatic_coloring(4, Color::Red);
  const TightCycle c{{0, 1, 2, 3}};
  CHECK(c.edges() == std::vector<Triple>{{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}});
  CHECK(verify_tight_cycle(c, red4.host(), red4, Color::Red));
  CHECK_FALSE(verify_tight_cycle(c, red4.host(), red4, Color::Blue));

  const auto one_blue = Coloring::from_function(
      Hypergraph3::complete(4), [](const Triple& t) { return t == Triple{0, 2, 3} ? Color::Blue : Color::Red; });
  CHECK_FALSE(verify_tight_cycle(c, one_blue.host(), one_blue, Color::Red));

  CHECK_FALSE(verify_tight_cycle({{0, 1, 2}}, red4.host(), red4, Color::Red));
  CHECK(verify_tight_cycle({}, red4.host(), red4, Color::Red));

  const auto red6 = monochromatic_coloring(6, Color::Red);
  CHECK_FALSE(verify_tight_cycle({{0, 1, 2, 0, 3}}, red6.host(), red6, Color::Red));
  CHECK_FALSE(verify_tight_cycle({{0, 1, 2, 9}}, red6.host(), red6, Color::Red));
}

TEST_CASE("parity") {
  CHECK(parse_parity("EVEN") == Parity::Even);
  CHECK(parse_parity("odd") == Parity::Odd);
  CHECK(parse_parity("Any") == Parity::Any);
  CHECK_THROWS_AS(parse_parity("sometimes"), ParseError);
  CHECK(parity_allows(Parity::Any, 0));
  CHECK_FALSE(parity_allows(Parity::Even, 0));
  CHECK_FALSE(parity_allows(Parity::Odd, 0));
  CHECK(parity_allows(Parity::Odd, 5));
  CHECK(parity_allows(Parity::Even, 6));
}

TEST_CASE("search_cycle_pair on an all-red K_6") {
  const auto col = monochromatic_coloring(6, Color::Red);
  const auto& h = col.host();

  const auto any = search_cycle_pair(h, col, {0, Parity::Any, Parity::Any, 0});
  REQUIRE(any.status == SearchStatus::Found);
  CHECK(any.pair->red.length() == 6);
  CHECK(any.pair->blue.empty());
  CHECK(verify_cycle_pair(*any.pair, h, col).valid);

  const auto odd0 = search_cycle_pair(h, col, {0, Parity::Odd, Parity::Any, 0});
  CHECK(odd0.status == SearchStatus::Exhausted);
  CHECK_FALSE(odd0.pair);

  const auto odd1 = search_cycle_pair(h, col, {1, Parity::Odd, Parity::Any, 0});
  REQUIRE(odd1.status == SearchStatus::Found);
  CHECK(odd1.pair->red.length() == 5);
  CHECK(odd1.pair->uncovered.size() == 1);
}

TEST_CASE("search_cycle_pair with max_uncovered = n always succeeds under Any/Any") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto col = uniform_coloring(8, 0.5, seed);
    const auto r = search_cycle_pair(col.host(), col, {8, Parity::Any, Parity::Any, 0});
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_cycle_pair(*r.pair, col.host(), col).valid);
  }
}

TEST_CASE("search_cycle_pair rejects instances above the cap") {
  const auto col = uniform_coloring(17, 0.5, 1);
  CHECK_THROWS_AS(search_cycle_pair(col.host(), col, {}), InstanceTooLarge);
}

TEST_CASE("search_cycle_pair agrees with the enumeration oracle on n = 7") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto col = uniform_coloring(7, 0.5, seed);
    for (auto [pr, pb] : {std::pair{Parity::Any, Parity::Any}, {Parity::Even, Parity::Any}, {Parity::Odd, Parity::Odd}}) {
      const auto truth = oracle::oracle_cycle_pair(col.host(), col, pr, pb);
      if (truth.witness) CHECK(verify_cycle_pair(*truth.witness, col.host(), col).valid);
      const auto r = search_cycle_pair(col.host(), col, {3, pr, pb, 0});
      const bool expect = truth.optimum && *truth.optimum <= 3;
      REQUIRE(r.status != SearchStatus::Timeout);
      CHECK(r.pair.has_value() == expect);
      if (r.pair) {
        CHECK(r.pair->uncovered.size() == *truth.optimum);
        CHECK(parity_allows(pr, r.pair->red.length()));
        CHECK(parity_allows(pb, r.pair->blue.length()));
        CHECK(verify_cycle_pair(*r.pair, col.host(), col).valid);
      }
    }
  }
}

TEST_CASE("search_cycle_pair on non-complete hosts") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto col = random_colored(7, 0.7, 0.5, seed);
    const auto truth = oracle::oracle_cycle_pair(col.host(), col, Parity::Any, Parity::Any);
    REQUIRE(truth.optimum);
    CHECK(min_uncovered(col.host(), col, Parity::Any, Parity::Any) == truth.optimum);
  }
}

TEST_CASE("search_cycle_pair honours a time budget") {
  const auto col = uniform_coloring(16, 0.5, 3);
  const auto start = std::chrono::steady_clock::now();
  const auto r = search_cycle_pair(col.host(), col, {0, Parity::Odd, Parity::Odd, 5});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(elapsed < std::chrono::seconds(2));
  if (r.status == SearchStatus::Found) CHECK(verify_cycle_pair(*r.pair, col.host(), col).valid);
  else CHECK(r.status == SearchStatus::Timeout);
}

TEST_CASE("loose_from_tight") {
  const TightCycle c6{{0, 1, 2, 3, 4, 5}};
  const auto loose = loose_from_tight(c6);
  CHECK(loose.edges == std::vector<Triple>{{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
  const auto red = monochromatic_coloring(6, Color::Red);
  CHECK(verify_loose_cycle(loose, red.host(), red, Color::Red));

  CHECK_THROWS_AS(loose_from_tight({{0, 1, 2, 3, 4}}), PreconditionError);
  CHECK_THROWS_AS(loose_from_tight({{0, 1, 2, 3}}), PreconditionError);

  const auto l8 = loose_from_tight({{0, 1, 2, 3, 4, 5, 6, 7}});
  CHECK(l8.edges.size() == 4);
  const auto red8 = monochromatic_coloring(8, Color::Red);
  CHECK(verify_loose_cycle(l8, red8.host(), red8, Color::Red));
}

TEST_CASE("verify_loose_cycle rejects malformed cycles") {
  const auto red = monochromatic_coloring(9, Color::Red);
  const auto& h = red.host();
  CHECK_FALSE(verify_loose_cycle({{{0, 1, 2}, {1, 2, 3}, {3, 4, 0}}}, h, red, Color::Red));  // shares 2
  CHECK_FALSE(verify_loose_cycle({{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}}, h, red, Color::Red));  // one hub vertex
  CHECK_FALSE(verify_loose_cycle({{{0, 1, 2}, {2, 3, 4}}}, h, red, Color::Red));
  CHECK_FALSE(verify_loose_cycle({{{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {6, 7, 0}}}, h, red, Color::Blue));

  std::vector<Triple> edges;
  for (const auto& e : h.edges())
    if (e != Triple{2, 3, 4}) edges.push_back(e);
  const Hypergraph3 holey(9, edges);
  const auto holey_red = Coloring::monochromatic(holey, Color::Red);
  CHECK_FALSE(verify_loose_cycle({{{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}}, holey, holey_red, Color::Red));
}

TEST_CASE("loose extraction on random embedded cycles") {
  for (std::size_t length = 6; length <= 14; length += 2) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto color = seed % 2 ? Color::Red : Color::Blue;
      const auto [c, col] = gen::embedded_cycle(length + 3, length, color, seed * 31 + length);
      REQUIRE(verify_tight_cycle(c, col.host(), col, color));
      const auto loose = loose_from_tight(c);
      CHECK(verify_loose_cycle(loose, col.host(), col, color));
      CHECK(loose.vertices(length + 3) == c.vertices(length + 3));
    }
  }
}

TEST_CASE("cycle pair JSON round trip") {
  const auto col = uniform_coloring(7, 0.5, 5);
  const auto r = search_cycle_pair(col.host(), col, {7, Parity::Any, Parity::Any, 0});
  REQUIRE(r.pair);
  const auto doc = to_json(r, 7);
  CHECK(doc["status"] == "found");
  const auto back = cycle_pair_from_json(nlohmann::json::parse(doc.dump()));
  CHECK(back.red == r.pair->red);
  CHECK(back.blue == r.pair->blue);
  CHECK(back.uncovered == r.pair->uncovered);
  CHECK(verify_cycle_pair(back, col.host(), col).valid);
}
