#include <doctest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "rcover/io.hpp"
#include "rcover/random.hpp"

namespace fs = std::filesystem;
using namespace rcover;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("rcover_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen models") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--model", "mono", "--n", "6", "--out", dir / "m.h3"}).code == 0);
  const auto mono = load_instance(dir / "m.h3");
  REQUIRE(mono.coloring);
  CHECK(mono.coloring->count(Color::Red) == 20);

  REQUIRE(invoke({"gen", "--p", "1.0", "--n", "6", "--seed", "9", "--out", dir / "u.h3"}).code == 0);
  CHECK(read_file(dir / "u.h3") == read_file(dir / "m.h3"));

  const auto a = invoke({"gen", "--n", "10", "--seed", "4"});
  const auto b = invoke({"gen", "--n", "10", "--seed", "4"});
  CHECK(a.out == b.out);
  CHECK(a.out != invoke({"gen", "--n", "10", "--seed", "5"}).out);

  const auto planted = invoke({"gen", "--model", "planted", "--sizes", "3,3", "--format", "json"});
  REQUIRE(planted.code == 0);
  CHECK(planted.out.find("\"colors\"") != std::string::npos);

  CHECK(invoke({"gen", "--model", "nope", "--n", "6"}).code == 1);
  CHECK(invoke({"gen", "--p", "1.5", "--n", "6"}).code == 1);
  CHECK(invoke({"gen", "--n", "3"}).code == 1);
}

TEST_CASE("solve then verify") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--model", "mono", "--n", "12", "--out", dir / "m.h3"}).code == 0);
  const auto solved = invoke({"solve", "--input", dir / "m.h3", "--gamma", "1e-6", "--out", dir / "s.json"});
  REQUIRE(solved.code == 0);
  const auto doc = nlohmann::json::parse(read_file(dir / "s.json"));
  CHECK(doc["covered"] == 12);
  const auto v = invoke({"verify", dir / "s.json", "--input", dir / "m.h3"});
  CHECK(v.code == 0);
  CHECK(v.out == "valid\n");

  // a tampered result fails
  auto bad = doc;
  bad["covered"] = 9;
  write_file(dir / "bad.json", bad.dump());
  const auto w = invoke({"verify", dir / "bad.json", "--input", dir / "m.h3"});
  CHECK(w.code == 1);
  CHECK(w.out.rfind("invalid", 0) == 0);
}

TEST_CASE("cycles exit codes") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--model", "mono", "--n", "6", "--out", dir / "m.h3"}).code == 0);
  const auto found = invoke({"cycles", "--input", dir / "m.h3", "--out", dir / "c.json"});
  CHECK(found.code == 0);
  CHECK(invoke({"verify", dir / "c.json", "--input", dir / "m.h3"}).code == 0);

  const auto absent = invoke({"cycles", "--input", dir / "m.h3", "--parity", "red=odd,blue=any", "--max-uncovered", "0"});
  CHECK(absent.code == 2);
  CHECK(nlohmann::json::parse(absent.out)["status"] == "exhausted");

  CHECK(invoke({"cycles", "--input", dir / "m.h3", "--parity", "green=odd"}).code == 1);
}

TEST_CASE("oracle subcommand") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--n", "6", "--seed", "2", "--out", dir / "u.h3"}).code == 0);
  for (const std::string kind : {"matching", "cycles", "perfect"}) {
    const auto r = invoke({"oracle", "--kind", kind, "--input", dir / "u.h3", "--out", dir / (kind + ".json")});
    CHECK(r.code != 1);
    CHECK(nlohmann::json::parse(read_file(dir / (kind + ".json")))["oracle"] == kind);
    CHECK(invoke({"verify", dir / (kind + ".json"), "--input", dir / "u.h3"}).code == 0);
  }
  CHECK(invoke({"oracle", "--kind", "perfect", "--color", "blue", "--input", dir / "u.h3"}).code != 1);
  CHECK(invoke({"oracle", "--kind", "everything", "--input", dir / "u.h3"}).code == 1);

  REQUIRE(invoke({"gen", "--n", "12", "--out", dir / "big.h3"}).code == 0);
  const auto capped = invoke({"oracle", "--input", dir / "big.h3"});
  CHECK(capped.code == 1);
  CHECK(capped.err.find("too large") != std::string::npos);
}

TEST_CASE("reduce then verify") {
  TempDir dir;
  REQUIRE(invoke({"gen", "--n", "9", "--seed", "3", "--out", dir / "u.h3"}).code == 0);
  nlohmann::json part{{"classes", {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}}, {"bip", nlohmann::json::object()}};
  for (const auto& [key, lo, hi] : {std::tuple{"0,1", 0, 3}, {"0,2", 0, 6}, {"1,2", 3, 6}}) {
    auto pairs = nlohmann::json::array();
    for (int x = lo; x < lo + 3; ++x)
      for (int y = hi; y < hi + 3; ++y) pairs.push_back({x, y});
    part["bip"][key] = pairs;
  }
  write_file(dir / "p.json", part.dump());
  const auto r = invoke({"reduce", "--input", dir / "u.h3", "--partition", dir / "p.json", "--out", dir / "r.json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(read_file(dir / "r.json"));
  CHECK(doc["densities"][0]["den"] == 27);
  CHECK(invoke({"verify", dir / "r.json", "--input", dir / "u.h3", "--partition", dir / "p.json"}).code == 0);
}

TEST_CASE("sweep is independent of the worker count") {
  TempDir dir;
  ::setenv("RCOVER_THREADS", "1", 1);
  const auto one = invoke({"sweep", "--n", "6..8", "--seeds", "1..200", "--p", "0.5"});
  ::setenv("RCOVER_THREADS", "4", 1);
  const auto four = invoke({"sweep", "--n", "6,7,8", "--seeds", "1..200"});
  ::unsetenv("RCOVER_THREADS");
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  std::size_t rows = 0;
  for (char c : one.out) rows += c == '\n';
  CHECK(rows == 601);
  CHECK(one.out.find(",false") == std::string::npos);

  write_file(dir / "sw.csv", one.out);
  CHECK(invoke({"verify", dir / "sw.csv"}).code == 0);

  const auto j = invoke({"sweep", "--n", "9", "--seeds", "1..3", "--format", "json", "--timing"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["records"].size() == 3);
  CHECK(doc["records"][0].contains("timing"));
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"solve"}).code == 1);
  CHECK(invoke({"sweep", "--seeds", "5..1"}).code == 1);
  CHECK(invoke({"--help"}).code == 0);
}
