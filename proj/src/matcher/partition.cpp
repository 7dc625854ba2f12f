#include <algorithm>
#include <map>

#include "rcover/matcher.hpp"

namespace rcover::matcher {

MonoStructure::MonoStructure(const Coloring& col) : col_(col) {
  for (auto c : {Color::Red, Color::Blue}) {
    graph_[index(c)] = col_.subgraph(c);
    parts_[index(c)] = connected_components(graph_[index(c)]);
  }
}

std::optional<ComponentRef> MonoStructure::component_of(const Triple& t) const {
  for (auto c : {Color::Red, Color::Blue}) {
    if (auto pos = graph(c).position(t)) return ComponentRef{c, components(c).component_of[*pos]};
  }
  return std::nullopt;
}

Hypergraph3 MonoStructure::component_graph(ComponentRef ref) const {
  const auto& g = graph(ref.color);
  const auto& part = components(ref.color);
  std::vector<Triple> edges;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    if (part.component_of[i] == ref.id) edges.push_back(g.edges()[i]);
  return g.with_edges(std::move(edges));
}

PartitionRB partition_rb(const Hypergraph3& k, const Coloring& col, const Params& p) {
  const auto n = k.universe();
  auto mono = std::make_shared<const MonoStructure>(col);

  PartitionRB part;
  part.red = VertexSet(n);
  part.blue = VertexSet(n);
  part.v_red = VertexSet(n);
  part.v_blue = VertexSet(n);
  part.chosen.assign(n, std::nullopt);
  part.chosen_degree.assign(n, 0);
  part.thresholds = p.at(k.vertex_count());
  part.mono = mono;

  std::array<std::vector<std::size_t>, 2> degree{
      std::vector<std::size_t>(mono->components(Color::Red).count, 0),
      std::vector<std::size_t>(mono->components(Color::Blue).count, 0)};
  std::vector<std::uint32_t> seen;

  for (auto x : k.vertices()) {
    std::array<std::vector<std::uint32_t>, 2> touched;
    for (auto y : k.vertices()) {
      if (y == x) continue;
      const auto pr = VertexPair::of(x, y);
      for (auto c : {Color::Red, Color::Blue}) {
        const auto ci = c == Color::Red ? 0 : 1;
        const auto& g = mono->graph(c);
        const auto& comp = mono->components(c);
        seen.clear();
        for (auto z : VertexSet::from_words(n, g.link_words(pr))) {
          const auto id = comp.component_of[*g.position(Triple::of(x, y, z))];
          if (std::find(seen.begin(), seen.end(), id) == seen.end()) seen.push_back(id);
        }
        // y ∈ N_C(x) for each distinct component C through the pair
        for (auto id : seen) {
          if (degree[ci][id]++ == 0) touched[ci].push_back(id);
        }
      }
    }

    std::optional<ComponentRef> best;
    std::size_t best_degree = 0;
    for (auto c : {Color::Red, Color::Blue}) {
      const auto ci = c == Color::Red ? 0 : 1;
      std::sort(touched[ci].begin(), touched[ci].end());
      for (auto id : touched[ci]) {
        // strict improvement only: red scanned first, ids ascending
        if (!best || degree[ci][id] > best_degree) {
          best = ComponentRef{c, id};
          best_degree = degree[ci][id];
        }
        degree[ci][id] = 0;
      }
    }
    part.chosen[x] = best;
    part.chosen_degree[x] = best_degree;
    if (best) (best->color == Color::Red ? part.red : part.blue).insert(x);
  }

  for (auto c : {Color::Red, Color::Blue}) {
    std::map<std::uint32_t, std::size_t> freq;
    for (auto x : part.side(c)) ++freq[part.chosen[x]->id];
    std::optional<ComponentRef> plurality;
    std::size_t top = 0;
    for (const auto& [id, count] : freq) {
      if (count > top) {
        top = count;
        plurality = ComponentRef{c, id};
      }
    }
    auto& target = c == Color::Red ? part.target_red : part.target_blue;
    auto& major = c == Color::Red ? part.major_red : part.major_blue;
    auto& v = c == Color::Red ? part.v_red : part.v_blue;
    target = plurality;
    if (plurality && part.side(c).size() >= ceil_count(part.thresholds.six_delta_t)) {
      major = plurality;
      for (auto x : part.side(c))
        if (part.chosen[x] == plurality) v.insert(x);
    }
  }
  return part;
}

VertexSet ConnectedMatching::covered(std::size_t universe) const {
  VertexSet s(universe);
  for (const auto& t : edges) {
    s.insert(t.a);
    s.insert(t.b);
    s.insert(t.c);
  }
  return s;
}

VertexSet MatchingPair::covered(std::size_t universe) const {
  return red.covered(universe) | blue.covered(universe);
}

ConnectedMatching certify(const MonoStructure& mono, Color color, std::vector<Triple> edges) {
  std::sort(edges.begin(), edges.end());
  ConnectedMatching m{color, std::move(edges), std::nullopt, {}};
  if (m.edges.empty()) return m;
  const auto& g = mono.graph(color);
  const auto first = g.position(m.edges.front());
  if (!first) throw Error(to_string(m.edges.front()) + " is not a " + std::string(color_name(color)) + " edge");
  m.component_id = mono.components(color).component_of[*first];
  for (std::size_t i = 0; i + 1 < m.edges.size(); ++i) {
    if (!g.contains(m.edges[i + 1]))
      throw Error(to_string(m.edges[i + 1]) + " is not a " + std::string(color_name(color)) + " edge");
    auto path = connecting_path(g, m.edges[i], m.edges[i + 1]);
    if (!path) throw Error("matching edges " + to_string(m.edges[i]) + " and " + to_string(m.edges[i + 1]) +
                           " lie in different components");
    m.certificates.push_back(std::move(*path));
  }
  return m;
}

}  // namespace rcover::matcher
