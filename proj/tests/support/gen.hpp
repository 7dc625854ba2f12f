#pragma once

// Random instances shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <numeric>
#include <set>

#include "rcover/cycles.hpp"
#include "rcover/random.hpp"
#include "rcover/reduced.hpp"

namespace gen {

using namespace rcover;

// A random cyclic order on `length` of the n vertices, and a complete host
// colored uniformly except that every cycle edge gets `color`.
struct EmbeddedCycle {
  cycles::TightCycle cycle;
  Coloring col;
};

inline EmbeddedCycle embedded_cycle(std::size_t n, std::size_t length, Color color, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  cycles::TightCycle c{{perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(length)}};
  const auto edges = c.edges();
  const std::set<Triple> forced(edges.begin(), edges.end());
  const auto base = uniform_coloring(n, 0.5, seed ^ 0xC1C1E);
  auto col = Coloring::from_function(Hypergraph3::complete(n), [&](const Triple& t) {
    return forced.count(t) ? color : base.color(t);
  });
  return {std::move(c), std::move(col)};
}

// Triad on three classes of the given sizes (consecutive ids) with each
// cross pair present with probability `p`.
inline reduced::Triad random_triad(std::array<std::size_t, 3> sizes, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  reduced::Triad t;
  Vertex next = 0;
  for (int i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < sizes[i]; ++k) t.classes[i].push_back(next++);
  const std::array<std::pair<int, int>, 3> sides{{{0, 1}, {0, 2}, {1, 2}}};
  for (int s = 0; s < 3; ++s)
    for (auto x : t.classes[sides[s].first])
      for (auto y : t.classes[sides[s].second])
        if (rng.uniform() < p) t.bip[s].push_back(VertexPair::of(x, y));
  return t;
}

}  // namespace gen
