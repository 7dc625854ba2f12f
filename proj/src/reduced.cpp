#include "rcover/reduced.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "rcover/io.hpp"

namespace rcover::reduced {

namespace {

constexpr std::array<std::pair<int, int>, 3> kSides{{{0, 1}, {0, 2}, {1, 2}}};

std::vector<VertexSet> adjacency(const std::vector<VertexPair>& pairs, std::size_t n) {
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (const auto& p : pairs) {
    adj[p.lo].insert(p.hi);
    adj[p.hi].insert(p.lo);
  }
  return adj;
}

std::uint64_t count_in(const Hypergraph3& h, const std::vector<Triple>& ts) {
  std::uint64_t k = 0;
  for (const auto& t : ts) k += t.c < h.universe() && h.contains(t);
  return k;
}

}  // namespace

std::size_t Triad::universe() const {
  Vertex top = 0;
  bool any = false;
  for (const auto& cls : classes)
    for (auto v : cls) {
      top = std::max(top, v);
      any = true;
    }
  return any ? top + 1 : 0;
}

void Triad::validate() const {
  const auto n = universe();
  std::vector<int> owner(n, -1);
  for (int i = 0; i < 3; ++i)
    for (auto v : classes[i]) {
      if (owner[v] != -1) throw PreconditionError("vertex " + std::to_string(v) + " lies in two triad classes");
      owner[v] = i;
    }
  for (int s = 0; s < 3; ++s) {
    const auto [ci, cj] = kSides[s];
    for (const auto& p : bip[s]) {
      const int a = p.lo < n ? owner[p.lo] : -1;
      const int b = p.hi < n ? owner[p.hi] : -1;
      if (!((a == ci && b == cj) || (a == cj && b == ci)))
        throw PreconditionError("bipartite pair {" + std::to_string(p.lo) + "," + std::to_string(p.hi) +
                                "} does not join classes " + std::to_string(ci) + " and " + std::to_string(cj));
    }
  }
}

std::vector<Triple> triangles(const Triad& p) {
  p.validate();
  const auto n = p.universe();
  const auto ij = adjacency(p.bip[0], n);
  const auto ik = adjacency(p.bip[1], n);
  const auto jk = adjacency(p.bip[2], n);
  std::vector<Triple> out;
  for (auto x : p.classes[0])
    for (auto y : p.classes[1]) {
      if (!ij[x].contains(y)) continue;
      for (auto z : ik[x] & jk[y]) out.push_back(Triple::of(x, y, z));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Density density(const Hypergraph3& h, const Triad& p) {
  const auto ts = triangles(p);
  if (ts.empty()) throw UndefinedDensity("triad has no triangles");
  return {count_in(h, ts), ts.size()};
}

Density density_tuple(const Hypergraph3& h, const std::vector<Triad>& qs) {
  if (qs.empty()) throw UndefinedDensity("empty triad tuple");
  std::vector<Triple> all;
  for (const auto& q : qs) {
    if (q.classes != qs.front().classes) throw PreconditionError("triads in a tuple must share their classes");
    const auto ts = triangles(q);
    all.insert(all.end(), ts.begin(), ts.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (all.empty()) throw UndefinedDensity("triad tuple has no triangles");
  return {count_in(h, all), all.size()};
}

Triad PartitionSpec::triad(std::size_t i, std::size_t j, std::size_t k) const {
  Triad p;
  p.classes = {classes.at(i), classes.at(j), classes.at(k)};
  const std::array<std::pair<std::size_t, std::size_t>, 3> keys{{{i, j}, {i, k}, {j, k}}};
  for (int s = 0; s < 3; ++s)
    if (auto it = bip.find(keys[s]); it != bip.end()) p.bip[s] = it->second;
  return p;
}

Coloring ReducedHypergraph::coloring() const {
  return Coloring(Hypergraph3(t, edges), colors);
}

ReducedHypergraph build_reduced(const PartitionSpec& partition, const Hypergraph3& h_red,
                                const std::optional<std::vector<Triple>>& regular_flags) {
  const auto t = partition.classes.size();
  for (const auto& [key, pairs] : partition.bip)
    if (key.first >= key.second || key.second >= t)
      throw PreconditionError("bipartite key (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                              ") is not an ordered pair of class indices");
  {
    std::set<Vertex> seen;
    for (const auto& cls : partition.classes)
      for (auto v : cls)
        if (!seen.insert(v).second) throw PreconditionError("vertex " + std::to_string(v) + " lies in two classes");
  }

  std::vector<Triple> candidates;
  if (regular_flags) {
    candidates = *regular_flags;
    for (const auto& e : candidates)
      if (e.c >= t) throw PreconditionError("regular triple " + to_string(e) + " exceeds the class count");
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  } else {
    for (Vertex k = 2; k < t; ++k)
      for (Vertex j = 1; j < k; ++j)
        for (Vertex i = 0; i < j; ++i) candidates.push_back({i, j, k});
  }

  ReducedHypergraph r;
  r.t = t;
  for (const auto& e : candidates) {
    const auto ts = triangles(partition.triad(e.a, e.b, e.c));
    if (ts.empty()) {
      if (regular_flags) throw UndefinedDensity("class triple " + to_string(e) + " has no triangles");
      continue;
    }
    const Density d{count_in(h_red, ts), ts.size()};
    r.edges.push_back(e);
    r.colors.push_back(d.at_least_half() ? Color::Red : Color::Blue);
    r.densities.push_back(d);
  }
  return r;
}

PartitionSpec partition_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("partition must be an object");
    PartitionSpec p;
    for (const auto& cls : doc.at("classes")) p.classes.push_back(cls.get<std::vector<Vertex>>());
    if (doc.contains("bip")) {
      for (const auto& [key, pairs] : doc["bip"].items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("bip key '" + key + "' is not of the form i,j");
        std::size_t i = 0, j = 0;
        try {
          i = std::stoul(key.substr(0, comma));
          j = std::stoul(key.substr(comma + 1));
        } catch (const std::exception&) {
          throw ParseError("bip key '" + key + "' is not of the form i,j");
        }
        if (i >= j || j >= p.classes.size()) throw ParseError("bip key '" + key + "' needs i < j < class count");
        auto& list = p.bip[{i, j}];
        for (const auto& e : pairs) {
          const auto xy = e.get<std::array<Vertex, 2>>();
          list.push_back(VertexPair::of(xy[0], xy[1]));
        }
      }
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed partition: ") + e.what());
  } catch (const InvalidPair& e) {
    throw ParseError(std::string("malformed partition: ") + e.what());
  }
}

nlohmann::json to_json(const PartitionSpec& p) {
  nlohmann::json bip = nlohmann::json::object();
  for (const auto& [key, pairs] : p.bip) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : pairs) list.push_back({e.lo, e.hi});
    bip[std::to_string(key.first) + "," + std::to_string(key.second)] = std::move(list);
  }
  return {{"classes", p.classes}, {"bip", std::move(bip)}};
}

nlohmann::json to_json(const ReducedHypergraph& r) {
  nlohmann::json dens = nlohmann::json::array();
  for (std::size_t i = 0; i < r.edges.size(); ++i)
    dens.push_back({{"edge", triple_json(r.edges[i])}, {"num", r.densities[i].num}, {"den", r.densities[i].den}});
  return {{"reduced", to_h3json(r.coloring())}, {"densities", std::move(dens)}};
}

bool is_regular_pair(const std::vector<Vertex>& x, const std::vector<Vertex>& y, const std::vector<VertexPair>& edges,
                     double eps, std::optional<double> d) {
  if (x.size() > 12 || y.size() > 12) throw PreconditionError("regularity check is exhaustive: classes of at most 12");
  if (x.empty() || y.empty()) throw PreconditionError("regularity check needs nonempty classes");
  // adj[i]: bitmask over y of neighbours of x[i]
  std::vector<std::uint32_t> adj(x.size(), 0);
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (VertexPair::of(x[i], y[j]) == e) adj[i] |= 1u << j;
  }
  std::uint64_t total = 0;
  for (auto a : adj) total += std::popcount(a);
  const double base = d.value_or(static_cast<double>(total) / static_cast<double>(x.size() * y.size()));
  const double min_x = eps * static_cast<double>(x.size());
  const double min_y = eps * static_cast<double>(y.size());
  for (std::uint32_t xs = 1; xs < (1u << x.size()); ++xs) {
    if (!(std::popcount(xs) > min_x)) continue;
    for (std::uint32_t ys = 1; ys < (1u << y.size()); ++ys) {
      const auto ny = std::popcount(ys);
      if (!(ny > min_y)) continue;
      std::uint64_t e = 0;
      for (std::uint32_t m = xs; m; m &= m - 1) e += std::popcount(adj[std::countr_zero(m)] & ys);
      const double dens = static_cast<double>(e) / static_cast<double>(std::popcount(xs) * ny);
      if (!(std::fabs(dens - base) < eps)) return false;
    }
  }
  return true;
}

}  // namespace rcover::reduced
