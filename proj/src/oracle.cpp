#include "rcover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rcover/io.hpp"

namespace rcover::oracle {

namespace {

using Mask = std::uint32_t;

Mask mask_of(const Triple& t) { return (Mask{1} << t.a) | (Mask{1} << t.b) | (Mask{1} << t.c); }

// Tight components of `edges` by repeated BFS on the raw edge list.
std::vector<std::vector<Triple>> components(const std::vector<Triple>& edges) {
  std::vector<int> label(edges.size(), -1);
  std::vector<std::vector<Triple>> out;
  for (std::size_t s = 0; s < edges.size(); ++s) {
    if (label[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> queue{s};
    label[s] = id;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto& e = edges[queue[q]];
      out.back().push_back(e);
      for (std::size_t j = 0; j < edges.size(); ++j)
        if (label[j] == -1 && std::popcount(mask_of(e) & mask_of(edges[j])) == 2) {
          label[j] = id;
          queue.push_back(j);
        }
    }
  }
  return out;
}

// Maximum matching over edge masks by DP on the set of still-usable vertices.
class MatchingDp {
 public:
  explicit MatchingDp(std::vector<Mask> edges) : edges_(std::move(edges)) {}

  int best(Mask free) {
    if (std::popcount(free) < 3) return 0;
    if (auto it = memo_.find(free); it != memo_.end()) return it->second;
    ++states_;
    const Mask low = free & -free;
    int value = best(free & ~low);
    for (auto e : edges_)
      if ((e & low) && (e & free) == e) value = std::max(value, 1 + best(free & ~e));
    memo_[free] = value;
    return value;
  }

  std::vector<Mask> witness(Mask free) {
    std::vector<Mask> out;
    while (std::popcount(free) >= 3) {
      const int target = best(free);
      if (target == 0) break;
      const Mask low = free & -free;
      if (best(free & ~low) == target) {
        free &= ~low;
        continue;
      }
      for (auto e : edges_)
        if ((e & low) && (e & free) == e && 1 + best(free & ~e) == target) {
          out.push_back(e);
          free &= ~e;
          break;
        }
    }
    return out;
  }

  std::size_t states() const { return states_; }

 private:
  std::vector<Mask> edges_;
  std::map<Mask, int> memo_;
  std::size_t states_ = 0;
};

Mask vertex_mask(const Hypergraph3& h) {
  Mask m = 0;
  for (auto v : h.vertices()) m |= Mask{1} << v;
  return m;
}

}  // namespace

MatchingReport oracle_matching_cover(const Hypergraph3& h, const Coloring& col) {
  if (h.universe() > kMatchingCap)
    throw InstanceTooLarge("matching oracle is capped at " + std::to_string(kMatchingCap) + " vertices, got " +
                           std::to_string(h.universe()));
  std::array<std::vector<std::vector<Triple>>, 2> comps;
  for (auto c : {Color::Red, Color::Blue}) {
    std::vector<Triple> edges;
    for (const auto& e : h.edges())
      if (col.color(e) == c) edges.push_back(e);
    comps[c == Color::Red ? 0 : 1] = components(edges);
    comps[c == Color::Red ? 0 : 1].emplace_back();  // "no matching in this color"
  }

  const Mask all = vertex_mask(h);
  MatchingReport report;
  std::vector<Mask> best_edges;
  for (const auto& red : comps[0])
    for (const auto& blue : comps[1]) {
      std::vector<Mask> edges;
      for (const auto& e : red) edges.push_back(mask_of(e));
      for (const auto& e : blue) edges.push_back(mask_of(e));
      MatchingDp dp(std::move(edges));
      const auto value = static_cast<std::size_t>(3 * dp.best(all));
      report.instances_searched += dp.states();
      if (value > report.optimum) {
        report.optimum = value;
        best_edges = dp.witness(all);
      }
    }

  // package the witness with certificates
  std::vector<Triple> red_edges, blue_edges;
  for (auto m : best_edges) {
    Vertex v[3];
    int k = 0;
    for (Mask b = m; b; b &= b - 1) v[k++] = static_cast<Vertex>(std::countr_zero(b));
    const Triple t{v[0], v[1], v[2]};
    (col.color(t) == Color::Red ? red_edges : blue_edges).push_back(t);
  }
  const matcher::MonoStructure mono(col);
  auto& w = report.witness;
  w.matchings.red = matcher::certify(mono, Color::Red, std::move(red_edges));
  w.matchings.blue = matcher::certify(mono, Color::Blue, std::move(blue_edges));
  const auto covered = w.matchings.covered(h.universe());
  w.covered = covered.size();
  w.uncovered = h.vertices() - covered;
  w.trace.push_back({"oracle", "exhaustive optimum " + std::to_string(report.optimum)});
  return report;
}

CycleReport oracle_cycle_pair(const Hypergraph3& h, const Coloring& col, cycles::Parity red, cycles::Parity blue) {
  if (h.universe() > kCycleCap)
    throw InstanceTooLarge("cycle oracle is capped at " + std::to_string(kCycleCap) + " vertices, got " +
                           std::to_string(h.universe()));
  const auto verts = h.vertices().to_vector();
  const auto m = verts.size();
  CycleReport report;

  // cycles[c][set] = some valid cyclic order on exactly that set
  std::array<std::map<Mask, std::vector<Vertex>>, 2> found;
  for (auto& f : found) f[0] = {};
  for (Mask set = 1; set < (Mask{1} << m); ++set) {
    if (std::popcount(set) < 4) continue;
    std::vector<Vertex> order;
    for (std::size_t i = 0; i < m; ++i)
      if (set >> i & 1) order.push_back(verts[i]);
    // first vertex fixed (rotation), order[1] < order.back() (reflection)
    do {
      if (order[1] > order.back()) continue;
      ++report.instances_searched;
      for (auto c : {Color::Red, Color::Blue}) {
        auto& table = found[c == Color::Red ? 0 : 1];
        if (table.count(set)) continue;
        bool ok = true;
        const auto l = order.size();
        for (std::size_t i = 0; ok && i < l; ++i) {
          const auto t = Triple::of(order[i], order[(i + 1) % l], order[(i + 2) % l]);
          ok = h.contains(t) && col.color(t) == c;
        }
        if (ok) table[set] = order;
      }
    } while (std::next_permutation(order.begin() + 1, order.end()));
  }

  for (const auto& [rs, ro] : found[0]) {
    if (!cycles::parity_allows(red, ro.size())) continue;
    for (const auto& [bs, bo] : found[1]) {
      if ((rs & bs) || !cycles::parity_allows(blue, bo.size())) continue;
      const auto uncovered = m - ro.size() - bo.size();
      if (!report.optimum || uncovered < *report.optimum) {
        report.optimum = uncovered;
        cycles::CyclePair p;
        p.red.order = ro;
        p.blue.order = bo;
        p.uncovered = h.vertices() - (p.red.vertices(h.universe()) | p.blue.vertices(h.universe()));
        report.witness = std::move(p);
      }
    }
  }
  return report;
}

PerfectReport oracle_perfect_matching(const Hypergraph3& h) {
  const auto t = h.vertex_count();
  if (t % 3 != 0 || t > kPerfectCap)
    throw PreconditionError("perfect-matching oracle needs |V| divisible by 3 and at most " +
                            std::to_string(kPerfectCap) + ", got " + std::to_string(t));
  PerfectReport report;
  const auto& edges = h.edges();
  const auto need = t / 3;
  std::vector<Triple> chosen;
  std::vector<char> used(h.universe(), 0);

  // choose edges with increasing index; stop at the first full matching
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    ++report.instances_searched;
    if (chosen.size() == need) return true;
    for (std::size_t i = from; i < edges.size(); ++i) {
      const auto& e = edges[i];
      if (used[e.a] || used[e.b] || used[e.c]) continue;
      used[e.a] = used[e.b] = used[e.c] = 1;
      chosen.push_back(e);
      if (self(self, i + 1)) return true;
      chosen.pop_back();
      used[e.a] = used[e.b] = used[e.c] = 0;
    }
    return false;
  };
  report.exists = rec(rec, 0);
  if (report.exists) report.witness = chosen;
  return report;
}

nlohmann::json to_json(const MatchingReport& r) {
  auto witness = matcher::to_json(r.witness);
  witness.erase("timing");
  return {{"kind", "oracle"},
          {"oracle", "matching"},
          {"optimum", r.optimum},
          {"instances_searched", r.instances_searched},
          {"witness", std::move(witness)}};
}

nlohmann::json to_json(const CycleReport& r, std::size_t n, cycles::Parity red, cycles::Parity blue) {
  nlohmann::json doc{{"kind", "oracle"},
                     {"oracle", "cycles"},
                     {"parity", {{"red", std::string(cycles::parity_name(red))}, {"blue", std::string(cycles::parity_name(blue))}}},
                     {"optimum", r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json(nullptr)},
                     {"instances_searched", r.instances_searched}};
  if (r.witness) {
    cycles::SearchResult sr;
    sr.status = cycles::SearchStatus::Found;
    sr.pair = r.witness;
    doc["witness"] = cycles::to_json(sr, n);
  }
  return doc;
}

nlohmann::json to_json(const PerfectReport& r) {
  nlohmann::json doc{{"kind", "oracle"}, {"oracle", "perfect"}, {"exists", r.exists}, {"instances_searched", r.instances_searched}};
  if (r.witness) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : *r.witness) edges.push_back(triple_json(e));
    doc["witness"] = std::move(edges);
  }
  return doc;
}

}  // namespace rcover::oracle
