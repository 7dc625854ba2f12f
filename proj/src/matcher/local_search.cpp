#include <algorithm>
#include <optional>

#include "rcover/matcher.hpp"

namespace rcover::matcher {

std::string_view move_name(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::GreedyAdd: return "greedy-add";
    case Move::Kind::OneForTwo: return "one-for-two";
    case Move::Kind::TwoForThree: return "two-for-three";
  }
  return "?";
}

namespace {

void insert_all(VertexSet& s, const Triple& t) {
  s.insert(t.a);
  s.insert(t.b);
  s.insert(t.c);
}

class ExchangeSearch {
 public:
  ExchangeSearch(const Hypergraph3& k, const PartitionRB& part)
      : k_(k), n_(k.universe()), covered_(k.universe()) {
    for (auto c : {Color::Red, Color::Blue}) {
      if (const auto& ref = part.target(c)) target_[slot(c)] = part.mono->component_graph(*ref);
    }
  }

  LocalSearchResult run(const MonoStructure& mono) {
    while (greedy_add() || one_for_two() || two_for_three()) {
    }
    LocalSearchResult out;
    out.matchings.red = certify(mono, Color::Red, edges_[0]);
    out.matchings.blue = certify(mono, Color::Blue, edges_[1]);
    out.moves = std::move(moves_);
    return out;
  }

 private:
  static std::size_t slot(Color c) { return c == Color::Red ? 0 : 1; }

  VertexSet uncovered() const { return k_.vertices() - covered_; }

  // z with xyz an edge of either target component.
  VertexSet candidate_link(Vertex x, Vertex y) const {
    VertexSet out(n_);
    const auto p = VertexPair::of(x, y);
    for (const auto& g : target_)
      if (g) out |= VertexSet::from_words(n_, g->link_words(p));
    return out;
  }

  Color color_of(const Triple& t) const {
    return target_[0] && target_[0]->contains(t) ? Color::Red : Color::Blue;
  }

  std::vector<Triple> matching_edges() const {
    std::vector<Triple> all = edges_[0];
    all.insert(all.end(), edges_[1].begin(), edges_[1].end());
    std::sort(all.begin(), all.end());
    return all;
  }

  // `count` pairwise disjoint target edges inside `free`, each meeting `hit`.
  // Edges of an improving exchange always meet the removed vertices (greedy
  // addition has run dry), and disjoint edges have distinct lowest hit
  // vertices, so branching on "which edge has h as its lowest hit vertex"
  // is exhaustive.
  std::optional<std::vector<Triple>> disjoint_edges(const VertexSet& free, const VertexSet& hit,
                                                    std::size_t count) const {
    const auto hv = hit.to_vector();
    std::vector<Triple> chosen;
    auto rec = [&](auto&& self, std::size_t i, VertexSet allowed) -> bool {
      if (chosen.size() == count) return true;
      if (hv.size() - i < count - chosen.size()) return false;
      const auto h = hv[i];
      if (!allowed.contains(h)) return self(self, i + 1, allowed);
      allowed.erase(h);
      for (auto y : allowed) {
        for (auto z : candidate_link(h, y) & allowed) {
          if (z < y) continue;
          chosen.push_back(Triple::of(h, y, z));
          auto rest = allowed;
          rest.erase(y);
          rest.erase(z);
          if (self(self, i + 1, rest)) return true;
          chosen.pop_back();
        }
      }
      return self(self, i + 1, allowed);
    };
    if (!rec(rec, 0, free)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  void apply(Move::Kind kind, std::vector<Triple> removed, std::vector<Triple> added) {
    for (const auto& t : removed) {
      for (auto& list : edges_) list.erase(std::remove(list.begin(), list.end(), t), list.end());
      covered_.erase(t.a);
      covered_.erase(t.b);
      covered_.erase(t.c);
    }
    for (const auto& t : added) {
      edges_[slot(color_of(t))].push_back(t);
      insert_all(covered_, t);
    }
    moves_.push_back({kind, std::move(removed), std::move(added), covered_.size()});
  }

  bool greedy_add() {
    const auto free = uncovered();
    for (auto c : free) {
      for (auto b : free) {
        if (b >= c) break;
        const auto link = candidate_link(b, c) & free;
        if (auto a = link.first(); a && *a < b) {
          apply(Move::Kind::GreedyAdd, {}, {Triple{*a, b, c}});
          return true;
        }
      }
    }
    return false;
  }

  bool one_for_two() {
    const auto base = uncovered();
    for (const auto& e : matching_edges()) {
      auto hit = VertexSet(n_);
      insert_all(hit, e);
      if (auto added = disjoint_edges(base | hit, hit, 2)) {
        apply(Move::Kind::OneForTwo, {e}, std::move(*added));
        return true;
      }
    }
    return false;
  }

  bool two_for_three() {
    const auto base = uncovered();
    const auto all = matching_edges();
    for (std::size_t p = 0; p < all.size(); ++p) {
      for (std::size_t q = p + 1; q < all.size(); ++q) {
        auto hit = VertexSet(n_);
        insert_all(hit, all[p]);
        insert_all(hit, all[q]);
        if (auto added = disjoint_edges(base | hit, hit, 3)) {
          apply(Move::Kind::TwoForThree, {all[p], all[q]}, std::move(*added));
          return true;
        }
      }
    }
    return false;
  }

  const Hypergraph3& k_;
  std::size_t n_;
  std::array<std::optional<Hypergraph3>, 2> target_;
  std::array<std::vector<Triple>, 2> edges_;
  VertexSet covered_;
  std::vector<Move> moves_;
};

}  // namespace

LocalSearchResult local_search_matching(const Hypergraph3& k, const Coloring& /*col*/, const PartitionRB& part,
                                        const Params& /*p*/) {
  ExchangeSearch search(k, part);
  return search.run(*part.mono);
}

bool good_edge(const Hypergraph3& k, const Coloring& /*col*/, const PartitionRB& part, const Triple& e) {
  if (!part.major_red || !part.major_blue)
    throw GoodUndefined("good edges need both a major red and a major blue component");
  if (!k.contains(e)) throw NotAnEdge(to_string(e) + " is not an edge");
  const auto red = part.mono->component_graph(*part.major_red);
  const auto blue = part.mono->component_graph(*part.major_blue);
  const auto pairs = e.pairs();
  for (std::size_t i = 0; i < 3; ++i) {
    if (red.link_size(pairs[i].lo, pairs[i].hi) == 0) continue;
    for (std::size_t j = 0; j < 3; ++j)
      if (j != i && blue.link_size(pairs[j].lo, pairs[j].hi) > 0) return true;
  }
  return false;
}

}  // namespace rcover::matcher
