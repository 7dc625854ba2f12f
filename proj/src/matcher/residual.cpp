#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "rcover/matcher.hpp"

namespace rcover::matcher {

namespace {

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const noexcept {
    std::size_t h = 0x9E3779B97F4A7C15ull;
    for (auto x : w) h = (h ^ x) * 0x100000001B3ull + (h >> 29);
    return h;
  }
};

std::vector<std::uint64_t> key_of(const VertexSet& s) { return {s.words().begin(), s.words().end()}; }

// Edges {v,y,z} of b with y,z in `free` (v = min of free assumed), colex order.
std::vector<Triple> edges_through(const Hypergraph3& b, Vertex v, const VertexSet& free) {
  std::vector<Triple> out;
  for (auto y : free) {
    if (y == v) continue;
    for (auto z : VertexSet::from_words(b.universe(), b.link_words(VertexPair::of(v, y))) & free)
      if (z > y) out.push_back(Triple::of(v, y, z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class BudgetExceeded {};

class PerfectSearch {
 public:
  PerfectSearch(const Hypergraph3& b, std::size_t budget) : b_(b), budget_(budget) {}

  bool solve(const VertexSet& free) {
    if (free.empty()) return true;
    if (++nodes_ > budget_) throw BudgetExceeded{};
    auto key = key_of(free);
    if (dead_.count(key)) return false;
    const auto v = *free.first();
    for (const auto& t : edges_through(b_, v, free)) {
      auto rest = free;
      rest.erase(t.a);
      rest.erase(t.b);
      rest.erase(t.c);
      chosen_.push_back(t);
      if (solve(rest)) return true;
      chosen_.pop_back();
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::size_t nodes() const { return nodes_; }
  const std::vector<Triple>& chosen() const { return chosen_; }

 private:
  const Hypergraph3& b_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> dead_;
  std::vector<Triple> chosen_;
};

class MaxSearch {
 public:
  MaxSearch(const Hypergraph3& b, std::size_t budget) : b_(b), budget_(budget) {}

  // Maximum number of disjoint edges inside `free`.
  std::size_t best(const VertexSet& free) {
    if (free.size() < 3) return 0;
    auto key = key_of(free);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;
    if (++nodes_ > budget_) throw BudgetExceeded{};
    const auto v = *free.first();
    auto without = free;
    without.erase(v);
    Entry entry{best(without), std::nullopt};
    for (const auto& t : edges_through(b_, v, free)) {
      if (entry.value == free.size() / 3) break;
      auto rest = without;
      rest.erase(t.b);
      rest.erase(t.c);
      const auto value = 1 + best(rest);
      if (value > entry.value) entry = {value, t};
    }
    memo_.emplace(std::move(key), entry);
    return entry.value;
  }

  std::vector<Triple> reconstruct(VertexSet free) const {
    std::vector<Triple> out;
    while (free.size() >= 3) {
      const auto it = memo_.find(key_of(free));
      if (it == memo_.end()) break;
      const auto v = *free.first();
      if (const auto& t = it->second.edge) {
        out.push_back(*t);
        free.erase(t->a);
        free.erase(t->b);
        free.erase(t->c);
      } else {
        free.erase(v);
      }
    }
    return out;
  }

 private:
  struct Entry {
    std::size_t value;
    std::optional<Triple> edge;
  };

  const Hypergraph3& b_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::vector<std::uint64_t>, Entry, WordsHash> memo_;
};

std::vector<Triple> greedy_matching(const Hypergraph3& b) {
  VertexSet used(b.universe());
  std::vector<Triple> out;
  for (const auto& t : b.edges()) {
    if (used.contains(t.a) || used.contains(t.b) || used.contains(t.c)) continue;
    out.push_back(t);
    used.insert(t.a);
    used.insert(t.b);
    used.insert(t.c);
  }
  return out;
}

}  // namespace

ResidualComponent blue_residual_component(const Hypergraph3& k, const Coloring& /*col*/, const PartitionRB& part,
                                          const MatchingPair& m, const Params& /*p*/, Color primary) {
  const auto other = opposite(primary);
  const auto n = k.universe();
  const auto& major = part.major(primary);
  if (!major) throw BranchInapplicable("no major " + std::string(color_name(primary)) + " component");

  const auto residual = part.v(primary) - m.covered(n);
  const auto& other_graph = part.mono->graph(other);
  std::optional<Triple> anchor;
  for (const auto& t : other_graph.edges()) {
    if (residual.contains(t.a) && residual.contains(t.b) && residual.contains(t.c)) {
      anchor = t;
      break;
    }
  }
  if (!anchor)
    throw BranchInapplicable("no " + std::string(color_name(other)) + " edge inside the " +
                             std::string(color_name(primary)) + " residual");

  const auto major_graph = part.mono->component_graph(*major);
  const auto x = anchor->a;
  VertexSet inner(n);
  for (auto w : residual)
    if (w == x || major_graph.link_size(w, x) > 0) inner.insert(w);
  if (!inner.contains(anchor->b) || !inner.contains(anchor->c))
    throw BranchInapplicable("anchor " + to_string(*anchor) + " leaves the trimmed residual");

  const auto sub = other_graph.induced(inner);
  const auto comps = connected_components(sub);
  const auto anchor_comp = comps.component_of[*sub.position(*anchor)];
  std::vector<Triple> comp_edges;
  VertexSet span(n);
  for (std::size_t i = 0; i < sub.edge_count(); ++i) {
    if (comps.component_of[i] != anchor_comp) continue;
    const auto& t = sub.edges()[i];
    comp_edges.push_back(t);
    span.insert(t.a);
    span.insert(t.b);
    span.insert(t.c);
  }

  VertexSet trimmed(n);
  for (auto extra = span.size() % 3; extra > 0; --extra) {
    const auto v = *span.last();
    span.erase(v);
    trimmed.insert(v);
  }
  std::erase_if(comp_edges, [&](const Triple& t) {
    return trimmed.contains(t.a) || trimmed.contains(t.b) || trimmed.contains(t.c);
  });

  return {*anchor, inner, Hypergraph3(std::move(span), std::move(comp_edges)), trimmed,
          *part.mono->component_of(*anchor)};
}

DegreeCheck degree_condition(const Hypergraph3& b, double eta) {
  DegreeCheck d;
  const auto t = static_cast<double>(b.vertex_count());
  const auto pairs = t * (t - 1) / 2;
  d.hypothesis = (5.0 / 9.0 + eta) * pairs;
  d.strengthened = 25.0 / 36.0 * pairs;
  std::vector<std::size_t> deg(b.universe(), 0);
  for (const auto& e : b.edges()) {
    ++deg[e.a];
    ++deg[e.b];
    ++deg[e.c];
  }
  bool first = true;
  for (auto v : b.vertices()) {
    d.min_degree = first ? deg[v] : std::min(d.min_degree, deg[v]);
    first = false;
  }
  d.holds = static_cast<double>(d.min_degree) >= d.hypothesis;
  return d;
}

PerfectMatchingReport perfect_matching_dense(const Hypergraph3& b, std::size_t node_budget) {
  if (b.vertex_count() % 3 != 0)
    throw PreconditionError("perfect matching needs a vertex count divisible by 3, got " +
                            std::to_string(b.vertex_count()));
  PerfectMatchingReport report;
  report.degree = degree_condition(b);
  PerfectSearch search(b, node_budget);
  try {
    if (search.solve(b.vertices())) {
      auto edges = search.chosen();
      std::sort(edges.begin(), edges.end());
      report.matching = std::move(edges);
    }
  } catch (const BudgetExceeded&) {
    report.exhausted = false;
  }
  report.nodes = search.nodes();
  return report;
}

MaximumMatching maximum_matching(const Hypergraph3& b, std::size_t node_budget) {
  MaxSearch search(b, node_budget);
  MaximumMatching out;
  try {
    search.best(b.vertices());
    out.edges = search.reconstruct(b.vertices());
  } catch (const BudgetExceeded&) {
    out.edges = greedy_matching(b);
    out.exact = false;
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

Dissolution dissolve_blue(const Hypergraph3& k, const Coloring& col, const PartitionRB& part,
                          const ConnectedMatching& m_other, Color primary) {
  const auto n = k.universe();
  Dissolution out{{}, VertexSet(n)};
  if (m_other.edges.empty()) return out;

  const auto& inside = part.v(primary);
  for (const auto& t : m_other.edges)
    if (!inside.contains(t.a) || !inside.contains(t.b) || !inside.contains(t.c))
      throw BranchInapplicable("edge " + to_string(t) + " is not inside V_" + std::string(color_name(primary)));
  const auto major_graph = part.mono->component_graph(*part.major(primary));

  std::vector<VertexPair> pairs;
  VertexSet singles(n);
  for (const auto& t : m_other.edges) {
    pairs.push_back({t.a, t.b});
    singles.insert(t.c);
  }
  std::sort(pairs.begin(), pairs.end());

  VertexSet used(n);
  for (const auto& uv : pairs) {
    bool matched = false;
    for (auto w : singles - used) {
      const auto t = Triple::of(uv.lo, uv.hi, w);
      if (!k.contains(t) || !col.has_color(t, primary)) continue;
      if (major_graph.link_size(uv.lo, w) == 0) continue;
      out.rematched.push_back(t);
      used.insert(w);
      matched = true;
      break;
    }
    if (!matched) {
      out.leftovers.insert(uv.lo);
      out.leftovers.insert(uv.hi);
    }
  }
  out.leftovers |= singles - used;
  std::sort(out.rematched.begin(), out.rematched.end());
  return out;
}

}  // namespace rcover::matcher
