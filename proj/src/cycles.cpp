#include "rcover/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <unordered_map>

#include "rcover/io.hpp"

namespace rcover::cycles {

std::vector<Triple> TightCycle::edges() const {
  std::vector<Triple> out;
  const auto l = order.size();
  if (l < 3) return out;
  for (std::size_t i = 0; i < l; ++i) {
    const auto a = order[i], b = order[(i + 1) % l], c = order[(i + 2) % l];
    if (a == b || b == c || a == c) continue;
    out.push_back(Triple::of(a, b, c));
  }
  return out;
}

VertexSet TightCycle::vertices(std::size_t universe) const {
  VertexSet s(universe);
  for (auto v : order)
    if (v < universe) s.insert(v);
  return s;
}

VertexSet LooseCycle::vertices(std::size_t universe) const {
  VertexSet s(universe);
  for (const auto& e : edges)
    for (auto v : e.vertices())
      if (v < universe) s.insert(v);
  return s;
}

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Any: return "any";
  }
  return "?";
}

Parity parse_parity(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "even") return Parity::Even;
  if (lower == "odd") return Parity::Odd;
  if (lower == "any") return Parity::Any;
  throw ParseError("parity must be even, odd or any, got '" + std::string(text) + "'");
}

bool parity_allows(Parity p, std::size_t length) {
  switch (p) {
    case Parity::Any: return true;
    case Parity::Even: return length > 0 && length % 2 == 0;
    case Parity::Odd: return length % 2 == 1;
  }
  return false;
}

Verification check_tight_cycle(const TightCycle& c, const Hypergraph3& h, const Coloring& col, Color color) {
  Verification v;
  const auto l = c.length();
  const auto name = std::string(color_name(color));
  if (l == 0) return v;
  if (l < 4) {
    v.fail(name + " cycle of length " + std::to_string(l) + " is below the minimum length 4");
    return v;
  }
  VertexSet seen(h.universe());
  for (auto x : c.order) {
    if (x >= h.universe() || !h.vertices().contains(x)) {
      v.fail(name + " cycle uses vertex " + std::to_string(x) + " outside V(H)");
      return v;
    }
    if (seen.contains(x)) v.fail(name + " cycle repeats vertex " + std::to_string(x));
    seen.insert(x);
  }
  if (!v.valid) return v;
  for (const auto& e : c.edges()) {
    if (!h.contains(e)) v.fail(name + " cycle edge " + to_string(e) + " is not a host edge");
    else if (!col.has_color(e, color)) v.fail(name + " cycle edge " + to_string(e) + " has the wrong color");
  }
  return v;
}

bool verify_tight_cycle(const TightCycle& c, const Hypergraph3& h, const Coloring& col, Color color) {
  return check_tight_cycle(c, h, col, color).valid;
}

Verification check_loose_cycle(const LooseCycle& c, const Hypergraph3& h, const Coloring& col, Color color) {
  Verification v;
  const auto l = c.edges.size();
  const auto name = std::string(color_name(color));
  if (l < 3) {
    v.fail("loose cycle needs at least 3 edges, got " + std::to_string(l));
    return v;
  }
  for (const auto& e : c.edges) {
    if (e.c >= h.universe() || !h.contains(e)) v.fail("loose cycle edge " + to_string(e) + " is not a host edge");
    else if (!col.has_color(e, color)) v.fail("loose cycle edge " + to_string(e) + " is not " + name);
  }
  auto shared = [](const Triple& x, const Triple& y) {
    std::vector<Vertex> out;
    for (auto u : x.vertices())
      if (y.contains(u)) out.push_back(u);
    return out;
  };
  for (std::size_t i = 0; i < l; ++i) {
    const auto& e = c.edges[i];
    const auto& next = c.edges[(i + 1) % l];
    const auto& prev = c.edges[(i + l - 1) % l];
    const auto s_next = shared(e, next);
    const auto s_prev = shared(prev, e);
    if (s_next.size() != 1) {
      v.fail("consecutive edges " + to_string(e) + " and " + to_string(next) + " share " +
             std::to_string(s_next.size()) + " vertices");
      continue;
    }
    if (s_prev.size() == 1 && s_prev[0] == s_next[0])
      v.fail("edge " + to_string(e) + " meets both neighbours in the same vertex");
    for (std::size_t j = i + 2; j < l; ++j) {
      if (i == 0 && j == l - 1) continue;
      if (!disjoint(e, c.edges[j]))
        v.fail("non-consecutive edges " + to_string(e) + " and " + to_string(c.edges[j]) + " intersect");
    }
  }
  return v;
}

bool verify_loose_cycle(const LooseCycle& c, const Hypergraph3& h, const Coloring& col, Color color) {
  return check_loose_cycle(c, h, col, color).valid;
}

Verification verify_cycle_pair(const CyclePair& p, const Hypergraph3& h, const Coloring& col) {
  Verification v;
  for (auto c : {Color::Red, Color::Blue}) {
    for (auto& d : check_tight_cycle(p.of(c), h, col, c).diagnostics) v.fail(std::move(d));
  }
  const auto n = h.universe();
  const auto red = p.red.vertices(n);
  const auto blue = p.blue.vertices(n);
  if (red.intersects(blue)) v.fail("disjointness: red and blue cycles share a vertex");
  if (p.uncovered.universe() != n || p.uncovered != h.vertices() - (red | blue))
    v.fail("uncovered set does not equal V(H) minus both cycles");
  return v;
}

LooseCycle loose_from_tight(const TightCycle& c) {
  const auto l = c.length();
  if (l % 2 != 0 || l < 6)
    throw PreconditionError("loose extraction needs an even tight cycle of length >= 6, got " + std::to_string(l));
  const auto all = c.edges();
  LooseCycle out;
  for (std::size_t i = 0; i < l; i += 2) out.edges.push_back(all[i]);
  return out;
}

std::string_view status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::Timeout: return "timeout";
  }
  return "?";
}

namespace {

using Mask = std::uint32_t;

struct OutOfTime {};

class PairSearch {
 public:
  PairSearch(const Hypergraph3& h, const Coloring& col, std::size_t budget_ms)
      : verts_(h.vertices().to_vector()), m_(verts_.size()), budget_ms_(budget_ms), start_(Clock::now()) {
    for (auto& table : link_) table.assign(m_ * m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = i + 1; j < m_; ++j)
        for (std::size_t k = j + 1; k < m_; ++k) {
          const auto t = Triple::of(verts_[i], verts_[j], verts_[k]);
          if (!h.contains(t)) continue;
          auto& table = link_[col.color(t) == Color::Red ? 0 : 1];
          table[i * m_ + j] |= Mask{1} << k;
          table[j * m_ + i] |= Mask{1} << k;
          table[i * m_ + k] |= Mask{1} << j;
          table[k * m_ + i] |= Mask{1} << j;
          table[j * m_ + k] |= Mask{1} << i;
          table[k * m_ + j] |= Mask{1} << i;
        }
  }

  std::size_t size() const { return m_; }
  std::size_t nodes() const { return nodes_; }
  Vertex vertex(std::size_t i) const { return verts_[i]; }

  // Tight Hamilton cycle on `set` in color slot c, memoized per set.
  const std::optional<std::vector<std::uint8_t>>& cycle_on(std::size_t c, Mask set) {
    auto& memo = memo_[c];
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    std::optional<std::vector<std::uint8_t>> found;
    if (set == 0) {
      found.emplace();
    } else if (std::popcount(set) >= 4) {
      std::vector<std::uint8_t> path{static_cast<std::uint8_t>(std::countr_zero(set))};
      const Mask rest = set & ~(Mask{1} << path[0]);
      for (Mask cand = rest; cand; cand &= cand - 1) {
        const auto v1 = static_cast<std::uint8_t>(std::countr_zero(cand));
        path.push_back(v1);
        if (extend(c, path, rest & ~(Mask{1} << v1))) {
          found = path;
          break;
        }
        path.pop_back();
      }
    }
    return memo.emplace(set, std::move(found)).first->second;
  }

 private:
  using Clock = std::chrono::steady_clock;

  void tick() {
    if ((++nodes_ & 0xFFF) == 0 && budget_ms_ > 0 &&
        Clock::now() - start_ > std::chrono::milliseconds(budget_ms_))
      throw OutOfTime{};
  }

  bool extend(std::size_t c, std::vector<std::uint8_t>& path, Mask rest) {
    tick();
    const auto& table = link_[c];
    const auto l = path.size();
    const auto u = path[l - 2], v = path[l - 1];
    if (rest == 0) {
      const auto s = path[0], s1 = path[1];
      return (table[u * m_ + v] >> s & 1) && (table[v * m_ + s] >> s1 & 1);
    }
    for (Mask cand = table[u * m_ + v] & rest; cand; cand &= cand - 1) {
      const auto w = static_cast<std::uint8_t>(std::countr_zero(cand));
      path.push_back(w);
      if (extend(c, path, rest & ~(Mask{1} << w))) return true;
      path.pop_back();
    }
    return false;
  }

  std::vector<Vertex> verts_;
  std::size_t m_;
  std::array<std::vector<Mask>, 2> link_;
  std::array<std::unordered_map<Mask, std::optional<std::vector<std::uint8_t>>>, 2> memo_;
  std::size_t nodes_ = 0;
  std::size_t budget_ms_;
  Clock::time_point start_;
};

bool valid_length(Parity p, std::size_t l) { return (l == 0 || l >= 4) && parity_allows(p, l); }

// Subsets of `pool` with k elements, increasing as integers (colex order).
template <class F>
bool for_each_subset(Mask pool, int k, F&& f) {
  std::vector<int> bits;
  for (Mask m = pool; m; m &= m - 1) bits.push_back(std::countr_zero(m));
  const int total = static_cast<int>(bits.size());
  if (k > total) return false;
  if (k == 0) return f(Mask{0});
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask s = 0;
    for (int i : idx) s |= Mask{1} << bits[i];
    if (f(s)) return true;
    // advance the lowest index that can move, colex style
    int i = 0;
    while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : total)) ++i;
    if (i == k) return false;
    ++idx[i];
    for (int j = 0; j < i; ++j) idx[j] = j;
  }
}

TightCycle to_cycle(const PairSearch& s, const std::vector<std::uint8_t>& order) {
  TightCycle c;
  for (auto i : order) c.order.push_back(s.vertex(i));
  return c;
}

}  // namespace

SearchResult search_cycle_pair(const Hypergraph3& h, const Coloring& col, const SearchOptions& opt) {
  if (h.vertex_count() > kSearchCap)
    throw InstanceTooLarge("cycle search is capped at " + std::to_string(kSearchCap) + " vertices, got " +
                           std::to_string(h.vertex_count()));
  PairSearch search(h, col, opt.budget_ms);
  const auto m = search.size();
  const Mask all = m == 32 ? ~Mask{0} : (Mask{1} << m) - 1;
  SearchResult result;

  try {
    const auto lowest = m > opt.max_uncovered ? m - opt.max_uncovered : 0;
    for (auto total = m + 1; total-- > lowest;) {
      for (auto r = total + 1; r-- > 0;) {
        const auto b = total - r;
        if (!valid_length(opt.red, r) || !valid_length(opt.blue, b)) continue;
        std::optional<CyclePair> found;
        for_each_subset(all, static_cast<int>(r), [&](Mask red_set) {
          const auto& red = search.cycle_on(0, red_set);
          if (!red) return false;
          return for_each_subset(all & ~red_set, static_cast<int>(b), [&](Mask blue_set) {
            const auto& blue = search.cycle_on(1, blue_set);
            if (!blue) return false;
            CyclePair p;
            p.red = to_cycle(search, *red);
            p.blue = to_cycle(search, *blue);
            p.uncovered = h.vertices() - (p.red.vertices(h.universe()) | p.blue.vertices(h.universe()));
            found = std::move(p);
            return true;
          });
        });
        if (found) {
          result.status = SearchStatus::Found;
          result.pair = std::move(found);
          result.nodes = search.nodes();
          return result;
        }
      }
    }
    result.status = SearchStatus::Exhausted;
  } catch (const OutOfTime&) {
    result.status = SearchStatus::Timeout;
  }
  result.nodes = search.nodes();
  return result;
}

std::optional<std::size_t> min_uncovered(const Hypergraph3& h, const Coloring& col, Parity red, Parity blue,
                                         std::size_t budget_ms) {
  const auto r = search_cycle_pair(h, col, {h.vertex_count(), red, blue, budget_ms});
  if (!r.pair) return std::nullopt;
  return r.pair->uncovered.size();
}

nlohmann::json to_json(const TightCycle& c, Color color) {
  return {{"color", std::string(color_name(color))}, {"length", c.length()}, {"order", c.order}};
}

nlohmann::json to_json(const LooseCycle& c, Color color) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : c.edges) edges.push_back(triple_json(e));
  return {{"color", std::string(color_name(color))}, {"edges", std::move(edges)}};
}

nlohmann::json to_json(const SearchResult& r, std::size_t n) {
  nlohmann::json doc{{"kind", "cycles"}, {"n", n}, {"status", std::string(status_name(r.status))}};
  if (r.pair) {
    doc["red"] = to_json(r.pair->red, Color::Red);
    doc["blue"] = to_json(r.pair->blue, Color::Blue);
    doc["uncovered"] = r.pair->uncovered.to_vector();
  }
  return doc;
}

CyclePair cycle_pair_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object() || doc.value("kind", std::string("cycles")) != "cycles")
      throw ParseError("not a cycle-pair document");
    if (!doc.contains("red")) throw ParseError("cycle-pair document has no cycles (status " +
                                               doc.value("status", std::string("?")) + ")");
    const auto n = doc.at("n").get<std::size_t>();
    CyclePair p;
    p.red.order = doc.at("red").at("order").get<std::vector<Vertex>>();
    p.blue.order = doc.at("blue").at("order").get<std::vector<Vertex>>();
    p.uncovered = VertexSet(n);
    for (const auto& v : doc.at("uncovered")) {
      const auto x = v.get<Vertex>();
      if (x >= n) throw ParseError("uncovered vertex " + std::to_string(x) + " out of range");
      p.uncovered.insert(x);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cycle pair: ") + e.what());
  }
}

}  // namespace rcover::cycles
