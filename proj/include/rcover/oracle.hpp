#pragma once

// Brute-force ground truth for small instances. Nothing here reuses the
// search code of the matcher or cycles modules; witnesses are packaged in
// their result types so the module verifiers can check them.

#include <optional>
#include <vector>

#include <json.hpp>

#include "rcover/cycles.hpp"
#include "rcover/matcher.hpp"

namespace rcover::oracle {

inline constexpr std::size_t kMatchingCap = 10;
inline constexpr std::size_t kCycleCap = 8;
inline constexpr std::size_t kPerfectCap = 15;

struct MatchingReport {
  std::size_t optimum = 0;  // covered vertices
  matcher::CoverResult witness;
  std::size_t instances_searched = 0;
};

// Maximum covered vertices over disjoint M_red, M_blue with M_red inside one
// red component and M_blue inside one blue component. Memoized subset DP
// over each pair of components. Throws InstanceTooLarge above kMatchingCap.
MatchingReport oracle_matching_cover(const Hypergraph3& h, const Coloring& col);

struct CycleReport {
  // Minimum uncovered over valid cycle pairs; absent when none meets the
  // parities.
  std::optional<std::size_t> optimum;
  std::optional<cycles::CyclePair> witness;
  std::size_t instances_searched = 0;
};

// Enumerates cyclic orders up to rotation and reflection of every vertex
// subset. Throws InstanceTooLarge above kCycleCap.
CycleReport oracle_cycle_pair(const Hypergraph3& h, const Coloring& col, cycles::Parity red, cycles::Parity blue);

struct PerfectReport {
  bool exists = false;
  std::optional<std::vector<Triple>> witness;
  std::size_t instances_searched = 0;
};

// Enumerates sets of pairwise disjoint edges in colex order. Throws
// PreconditionError unless |V| is a multiple of 3 and at most kPerfectCap.
PerfectReport oracle_perfect_matching(const Hypergraph3& h);

// {"kind":"oracle","oracle":"matching"|"cycles"|"perfect",...}
nlohmann::json to_json(const MatchingReport& r);
nlohmann::json to_json(const CycleReport& r, std::size_t n, cycles::Parity red, cycles::Parity blue);
nlohmann::json to_json(const PerfectReport& r);

}  // namespace rcover::oracle
