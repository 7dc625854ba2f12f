#include <doctest.h>

#include "rcover/oracle.hpp"
#include "rcover/random.hpp"
#include "support/brute.hpp"

using namespace rcover;
using namespace rcover::oracle;

TEST_CASE("oracle_matching_cover on monochromatic hosts") {
  for (std::size_t n : {6u, 7u}) {
    const auto col = monochromatic_coloring(n, Color::Red);
    const auto r = oracle_matching_cover(col.host(), col);
    CHECK(r.optimum == 6);
    CHECK(matcher::verify_cover(r.witness, col.host(), col).valid);
  }
  const auto big = monochromatic_coloring(11, Color::Red);
  CHECK_THROWS_AS(oracle_matching_cover(big.host(), big), InstanceTooLarge);
}

TEST_CASE("oracle_matching_cover dominates the matcher") {
  for (std::size_t n : {7u, 8u}) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto col = uniform_coloring(n, 0.5, seed);
      const auto truth = oracle_matching_cover(col.host(), col);
      CHECK(matcher::verify_cover(truth.witness, col.host(), col).valid);
      CHECK(truth.witness.covered == truth.optimum);
      const auto r = matcher::cover(col.host(), col, 1e-3);
      CHECK(r.covered <= truth.optimum);
      CHECK(r.covered + 6 >= truth.optimum);
    }
  }
}

TEST_CASE("oracle_matching_cover: two blue components cannot both be used") {
  // blue {0,1,2} and {3,4,5} are separate components; everything else red
  // except that no red edge lies inside {0..5}
  const auto col = Coloring::from_function(Hypergraph3::complete(6), [](const Triple& t) {
    return t == Triple{0, 1, 2} || t == Triple{3, 4, 5} ? Color::Blue : Color::Red;
  });
  const auto r = oracle_matching_cover(col.host(), col);
  // red edges {0,1,5}, {2,3,4} are disjoint and connected in red
  CHECK(r.optimum == 6);

  const auto sparse = Coloring::monochromatic(Hypergraph3(6, {{0, 1, 2}, {3, 4, 5}}), Color::Blue);
  CHECK(oracle_matching_cover(sparse.host(), sparse).optimum == 3);
}

TEST_CASE("oracle_cycle_pair") {
  const auto k6 = monochromatic_coloring(6, Color::Red);
  const auto any = oracle_cycle_pair(k6.host(), k6, cycles::Parity::Any, cycles::Parity::Any);
  CHECK(any.optimum == std::optional<std::size_t>{0});

  const auto k7 = monochromatic_coloring(7, Color::Red);
  const auto even = oracle_cycle_pair(k7.host(), k7, cycles::Parity::Even, cycles::Parity::Any);
  CHECK(even.optimum == std::optional<std::size_t>{1});
  REQUIRE(even.witness);
  CHECK(even.witness->red.length() == 6);

  // no blue edges at all: Odd blue is impossible
  const auto none = oracle_cycle_pair(k6.host(), k6, cycles::Parity::Any, cycles::Parity::Odd);
  CHECK_FALSE(none.optimum);

  const auto k9 = monochromatic_coloring(9, Color::Red);
  CHECK_THROWS_AS(oracle_cycle_pair(k9.host(), k9, cycles::Parity::Any, cycles::Parity::Any), InstanceTooLarge);
}

TEST_CASE("oracle_cycle_pair agrees with search on n = 6") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto col = uniform_coloring(6, 0.5, seed);
    const auto truth = oracle_cycle_pair(col.host(), col, cycles::Parity::Any, cycles::Parity::Any);
    REQUIRE(truth.optimum);
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto r = cycles::search_cycle_pair(col.host(), col, {k, cycles::Parity::Any, cycles::Parity::Any, 0});
      CHECK(r.pair.has_value() == (*truth.optimum <= k));
    }
  }
}

TEST_CASE("oracle_perfect_matching") {
  CHECK(oracle_perfect_matching(Hypergraph3::complete(6)).exists);

  const auto k5 = Hypergraph3::complete(5);
  const std::vector<Triple> avoid5 = k5.edges();
  CHECK_FALSE(oracle_perfect_matching(Hypergraph3(VertexSet::full(6), avoid5)).exists);

  CHECK_THROWS_AS(oracle_perfect_matching(Hypergraph3::complete(7)), PreconditionError);
  CHECK_THROWS_AS(oracle_perfect_matching(Hypergraph3::complete(18)), PreconditionError);
}

TEST_CASE("oracle_perfect_matching agrees with the matcher and subset DP") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto b = random_hypergraph(9, seed % 2 ? 0.1 : 0.25, seed);
    const auto truth = oracle_perfect_matching(b);
    CHECK(truth.exists == matcher::perfect_matching_dense(b).matching.has_value());
    CHECK(truth.exists == brute::has_perfect_matching(b.edges(), b.vertices().to_vector()));
    if (truth.witness) {
      VertexSet seen(9);
      for (const auto& e : *truth.witness) {
        CHECK(b.contains(e));
        for (auto v : e.vertices()) seen.insert(v);
      }
      CHECK(seen.size() == 9);
    }
  }
}

TEST_CASE("oracle JSON carries its kind") {
  const auto col = uniform_coloring(7, 0.5, 2);
  const auto m = to_json(oracle_matching_cover(col.host(), col));
  CHECK(m["kind"] == "oracle");
  CHECK(m["oracle"] == "matching");
  CHECK_FALSE(m["witness"].contains("timing"));
  const auto c = to_json(oracle_cycle_pair(col.host(), col, cycles::Parity::Any, cycles::Parity::Any), 7,
                         cycles::Parity::Any, cycles::Parity::Any);
  CHECK(c["oracle"] == "cycles");
  const auto p = to_json(oracle_perfect_matching(Hypergraph3::complete(6)));
  CHECK(p["exists"] == true);
}
