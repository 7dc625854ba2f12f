#include "rcover/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "rcover/errors.hpp"

namespace rcover {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    // keep the smaller index as root so roots track colex-first edges
    if (y < x) std::swap(x, y);
    parent_[y] = x;
  }

 private:
  std::vector<std::size_t> parent_;
};

template <class F>
void for_each_tight_neighbor(const Hypergraph3& h, const Triple& g, F&& f) {
  for (const auto& p : g.pairs()) {
    const auto own = g.opposite(p);
    const auto words = h.link_words(p);
    for (std::size_t w = 0; w < words.size(); ++w) {
      auto bits = words[w];
      while (bits != 0) {
        const auto z = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (z != own) f(Triple::of(p.lo, p.hi, z));
      }
    }
  }
}

}  // namespace

Hypergraph3::Hypergraph3(std::size_t universe, std::vector<Triple> edges)
    : universe_(universe), vertices_(VertexSet::full(universe)) {
  build(std::move(edges));
}

Hypergraph3::Hypergraph3(VertexSet vertices, std::vector<Triple> edges)
    : universe_(vertices.universe()), vertices_(std::move(vertices)) {
  build(std::move(edges));
}

Hypergraph3 Hypergraph3::complete(std::size_t universe) {
  std::vector<Triple> edges;
  edges.reserve(binomial(universe, 3));
  for (Vertex c = 2; c < universe; ++c)
    for (Vertex b = 1; b < c; ++b)
      for (Vertex a = 0; a < b; ++a) edges.push_back({a, b, c});
  return Hypergraph3(universe, std::move(edges));
}

void Hypergraph3::build(std::vector<Triple> edges) {
  vertex_count_ = vertices_.size();
  for (const auto& t : edges) {
    if (!(t.a < t.b && t.b < t.c)) throw PreconditionError("triple " + to_string(t) + " is not canonical");
    if (t.c >= universe_) throw PreconditionError("triple " + to_string(t) + " exceeds vertex count");
    if (!vertices_.contains(t.a) || !vertices_.contains(t.b) || !vertices_.contains(t.c))
      throw PreconditionError("triple " + to_string(t) + " leaves the vertex set");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  const auto all_triples = binomial(universe_, 3);
  dense_ = all_triples > 0 &&
           static_cast<double>(edges_.size()) >= kDenseThreshold * static_cast<double>(all_triples);
  if (dense_) {
    dense_bits_.assign((all_triples + 63) / 64, 0);
    for (const auto& t : edges_) {
      const auto i = colex_index(t);
      dense_bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
  } else {
    sparse_index_.reserve(edges_.size());
    for (const auto& t : edges_) sparse_index_.push_back(colex_index(t));
  }

  link_stride_ = VertexSet::word_count(universe_);
  links_.assign(binomial(universe_, 2) * link_stride_, 0);
  for (const auto& t : edges_) {
    for (const auto& p : t.pairs()) {
      const auto z = t.opposite(p);
      link_words_mut(p)[z >> 6] |= std::uint64_t{1} << (z & 63);
    }
  }
}

std::span<std::uint64_t> Hypergraph3::link_words_mut(VertexPair p) {
  return {links_.data() + pair_index(p) * link_stride_, link_stride_};
}

std::span<const std::uint64_t> Hypergraph3::link_words(VertexPair p) const {
  return {links_.data() + pair_index(p) * link_stride_, link_stride_};
}

bool Hypergraph3::contains(const Triple& t) const {
  if (!(t.a < t.b && t.b < t.c) || t.c >= universe_) return false;
  const auto i = colex_index(t);
  if (dense_) return ((dense_bits_[i >> 6] >> (i & 63)) & 1u) != 0;
  return std::binary_search(sparse_index_.begin(), sparse_index_.end(), i);
}

std::optional<std::size_t> Hypergraph3::position(const Triple& t) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), t);
  if (it == edges_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

VertexSet Hypergraph3::link(Vertex x, Vertex y) const {
  const auto p = VertexPair::of(x, y);
  if (p.hi >= universe_) return VertexSet(universe_);
  return VertexSet::from_words(universe_, link_words(p));
}

std::size_t Hypergraph3::link_size(Vertex x, Vertex y) const {
  const auto p = VertexPair::of(x, y);
  if (p.hi >= universe_) return 0;
  std::size_t total = 0;
  for (auto w : link_words(p)) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

VertexSet Hypergraph3::neighbors(Vertex x) const {
  VertexSet out(universe_);
  for (Vertex y = 0; y < universe_; ++y) {
    if (y == x) continue;
    for (auto w : link_words(VertexPair::of(x, y))) {
      if (w != 0) {
        out.insert(y);
        break;
      }
    }
  }
  return out;
}

Hypergraph3 Hypergraph3::induced(const VertexSet& keep) const {
  auto vs = vertices_ & keep;
  std::vector<Triple> kept;
  for (const auto& t : edges_)
    if (vs.contains(t.a) && vs.contains(t.b) && vs.contains(t.c)) kept.push_back(t);
  return Hypergraph3(std::move(vs), std::move(kept));
}

Hypergraph3 Hypergraph3::with_edges(std::vector<Triple> edges) const {
  return Hypergraph3(vertices_, std::move(edges));
}

std::vector<VertexPair> shadow(const Hypergraph3& h) {
  std::vector<VertexPair> out;
  for (Vertex y = 1; y < h.universe(); ++y) {
    for (Vertex x = 0; x < y; ++x) {
      const auto words = h.link_words({x, y});
      if (std::any_of(words.begin(), words.end(), [](auto w) { return w != 0; }))
        out.push_back({x, y});
    }
  }
  return out;
}

std::vector<VertexPair> active_pairs(const Hypergraph3& h) {
  std::vector<VertexPair> out;
  for (Vertex y = 1; y < h.universe(); ++y)
    for (Vertex x = 0; x < y; ++x)
      if (h.link_size(x, y) > 0) out.push_back({x, y});
  return out;
}

std::vector<std::vector<Triple>> EdgePartition::classes(const Hypergraph3& h) const {
  std::vector<std::vector<Triple>> out(count);
  for (std::size_t i = 0; i < component_of.size(); ++i) out[component_of[i]].push_back(h.edges()[i]);
  return out;
}

EdgePartition connected_components(const Hypergraph3& h) {
  const auto& edges = h.edges();
  UnionFind uf(edges.size());
  // All edges through a common pair are pairwise tight-adjacent; chaining
  // them to the first edge on that pair is enough.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& t = edges[i];
    for (const auto& p : t.pairs()) {
      const auto words = h.link_words(p);
      for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w] == 0) continue;
        const auto z = static_cast<Vertex>(w * 64 + std::countr_zero(words[w]));
        const auto first = Triple::of(p.lo, p.hi, z);
        if (first != t) uf.unite(i, *h.position(first));
        break;
      }
    }
  }
  EdgePartition part;
  part.component_of.resize(edges.size());
  std::vector<std::uint32_t> label(edges.size(), UINT32_MAX);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto root = uf.find(i);
    if (label[root] == UINT32_MAX) label[root] = static_cast<std::uint32_t>(part.count++);
    part.component_of[i] = label[root];
  }
  return part;
}

bool is_pseudo_path(const PseudoPath& path) {
  if (path.empty()) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!tight_adjacent(path[i], path[i + 1])) return false;
  return true;
}

std::optional<PseudoPath> connecting_path(const Hypergraph3& h, const Triple& e, const Triple& f) {
  const auto pe = h.position(e);
  const auto pf = h.position(f);
  if (!pe) throw NotAnEdge(to_string(e) + " is not an edge");
  if (!pf) throw NotAnEdge(to_string(f) + " is not an edge");
  if (e == f) return PseudoPath{e};

  // Distances to f, then a greedy walk from e picking the colex-smallest
  // neighbour one step closer.
  constexpr auto kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> dist(h.edge_count(), kUnseen);
  std::deque<std::size_t> queue{*pf};
  dist[*pf] = 0;
  while (!queue.empty() && dist[*pe] == kUnseen) {
    const auto cur = queue.front();
    queue.pop_front();
    for_each_tight_neighbor(h, h.edges()[cur], [&](const Triple& g) {
      const auto pg = *h.position(g);
      if (dist[pg] == kUnseen) {
        dist[pg] = dist[cur] + 1;
        queue.push_back(pg);
      }
    });
  }
  if (dist[*pe] == kUnseen) return std::nullopt;

  PseudoPath path{e};
  auto cur = e;
  for (auto d = dist[*pe]; d > 0; --d) {
    std::optional<Triple> best;
    for_each_tight_neighbor(h, cur, [&](const Triple& g) {
      const auto pg = *h.position(g);
      if (dist[pg] == d - 1 && (!best || g < *best)) best = g;
    });
    cur = *best;
    path.push_back(cur);
  }
  return path;
}

}  // namespace rcover
