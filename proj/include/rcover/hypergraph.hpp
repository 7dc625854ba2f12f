#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rcover/triple.hpp"
#include "rcover/vertex_set.hpp"

namespace rcover {

// Immutable 3-uniform hypergraph over a vertex subset of [0, universe).
//
// Edges are kept in colex order. Membership is answered from a dense bitmap
// over colex indices when at least a quarter of all triples of the universe
// are present, and from a sorted colex-index list otherwise. Every unordered
// pair {x,y} carries its link N(x,y) as a bitset, so link and shadow queries
// never scan the edge list.
class Hypergraph3 {
 public:
  static constexpr double kDenseThreshold = 0.25;

  Hypergraph3() = default;
  // Vertex set is all of [0, universe).
  Hypergraph3(std::size_t universe, std::vector<Triple> edges);
  // Every edge must lie inside `vertices`.
  Hypergraph3(VertexSet vertices, std::vector<Triple> edges);

  static Hypergraph3 complete(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  const VertexSet& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Triple>& edges() const noexcept { return edges_; }
  bool dense_storage() const noexcept { return dense_; }

  bool contains(const Triple& t) const;
  // Index of t in edges(), if present.
  std::optional<std::size_t> position(const Triple& t) const;

  // N(x,y) = {z : xyz is an edge}. Throws InvalidPair when x == y.
  VertexSet link(Vertex x, Vertex y) const;
  std::size_t link_size(Vertex x, Vertex y) const;
  std::span<const std::uint64_t> link_words(VertexPair p) const;

  // N(x) = {y : xy lies in the shadow}.
  VertexSet neighbors(Vertex x) const;

  // Sub-hypergraph induced on vertices ∩ keep.
  Hypergraph3 induced(const VertexSet& keep) const;
  // Same vertex set, given edges (which must be edges of this hypergraph).
  Hypergraph3 with_edges(std::vector<Triple> edges) const;

 private:
  void build(std::vector<Triple> edges);
  std::span<std::uint64_t> link_words_mut(VertexPair p);

  std::size_t universe_ = 0;
  VertexSet vertices_;
  std::size_t vertex_count_ = 0;
  std::vector<Triple> edges_;
  bool dense_ = false;
  std::vector<std::uint64_t> dense_bits_;
  std::vector<std::uint64_t> sparse_index_;
  std::size_t link_stride_ = 0;
  std::vector<std::uint64_t> links_;
};

// All pairs contained in some edge, in colex pair order.
std::vector<VertexPair> shadow(const Hypergraph3& h);

// Pairs with a nonempty link. Same set as shadow(h).
std::vector<VertexPair> active_pairs(const Hypergraph3& h);

// Partition of the edge set into tight components.
struct EdgePartition {
  // component_of[i] is the class of h.edges()[i]. Classes are numbered in
  // order of their colex-smallest edge.
  std::vector<std::uint32_t> component_of;
  std::size_t count = 0;

  std::vector<std::vector<Triple>> classes(const Hypergraph3& h) const;
};

EdgePartition connected_components(const Hypergraph3& h);

// Edge sequence with |e_i ∩ e_{i+1}| = 2 for consecutive entries.
using PseudoPath = std::vector<Triple>;

bool is_pseudo_path(const PseudoPath& path);

// Shortest pseudo-path from e to f inside h, or nullopt when they lie in
// different components. Among shortest paths the one whose successive edges
// have the smallest colex index is returned. Throws NotAnEdge.
std::optional<PseudoPath> connecting_path(const Hypergraph3& h, const Triple& e, const Triple& f);

}  // namespace rcover
