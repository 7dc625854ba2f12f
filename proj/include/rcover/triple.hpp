#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "rcover/vertex_set.hpp"

namespace rcover {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Unordered pair stored as (min, max).
struct VertexPair {
  Vertex lo = 0;
  Vertex hi = 0;

  static VertexPair of(Vertex x, Vertex y);

  bool operator==(const VertexPair&) const = default;
  auto operator<=>(const VertexPair& o) const {
    if (auto c = hi <=> o.hi; c != 0) return c;
    return lo <=> o.lo;
  }
};

// Colex rank of a pair: C(hi,2) + lo.
inline std::uint64_t pair_index(VertexPair p) {
  return std::uint64_t{p.hi} * (p.hi - 1) / 2 + p.lo;
}

// A 3-element vertex set in canonical form a < b < c. Ordering is colex,
// i.e. by (c, b, a), which agrees with colex_index.
struct Triple {
  Vertex a = 0;
  Vertex b = 1;
  Vertex c = 2;

  // Sorts its arguments; throws PreconditionError on repeated vertices.
  static Triple of(Vertex x, Vertex y, Vertex z);

  bool contains(Vertex v) const { return v == a || v == b || v == c; }
  std::array<Vertex, 3> vertices() const { return {a, b, c}; }
  std::array<VertexPair, 3> pairs() const { return {{{a, b}, {a, c}, {b, c}}}; }
  // The vertex of this triple not in pair p (p must be a subset).
  Vertex opposite(VertexPair p) const;

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple& o) const {
    if (auto r = c <=> o.c; r != 0) return r;
    if (auto r = b <=> o.b; r != 0) return r;
    return a <=> o.a;
  }
};

std::uint64_t colex_index(const Triple& t);
Triple colex_inverse(std::uint64_t index);

std::size_t intersection_size(const Triple& e, const Triple& f);

// |e ∩ f| == 2.
inline bool tight_adjacent(const Triple& e, const Triple& f) {
  return intersection_size(e, f) == 2;
}

inline bool disjoint(const Triple& e, const Triple& f) { return intersection_size(e, f) == 0; }

std::string to_string(const Triple& t);

}  // namespace rcover
