#pragma once

// Tight and loose cycles: verification, exact search for two vertex-disjoint
// monochromatic tight cycles of distinct colors with parity control, and
// loose-cycle extraction from even tight cycles.

#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rcover/coloring.hpp"
#include "rcover/errors.hpp"
#include "rcover/verification.hpp"

namespace rcover::cycles {

// Cyclic vertex order v0..v{l-1}; edge i is {v_i, v_i+1, v_i+2} (mod l).
// Valid lengths are 0 (empty) and l >= 4.
struct TightCycle {
  std::vector<Vertex> order;

  std::size_t length() const { return order.size(); }
  bool empty() const { return order.empty(); }
  std::vector<Triple> edges() const;
  VertexSet vertices(std::size_t universe) const;

  bool operator==(const TightCycle&) const = default;
};

struct LooseCycle {
  std::vector<Triple> edges;  // cyclic

  VertexSet vertices(std::size_t universe) const;
};

struct CyclePair {
  TightCycle red;
  TightCycle blue;
  VertexSet uncovered;

  const TightCycle& of(Color c) const { return c == Color::Red ? red : blue; }
  TightCycle& of(Color c) { return c == Color::Red ? red : blue; }
};

enum class Parity { Even, Odd, Any };

std::string_view parity_name(Parity p);
// "even" | "odd" | "any", case-insensitive. Throws ParseError.
Parity parse_parity(std::string_view text);
// The empty cycle satisfies Any only.
bool parity_allows(Parity p, std::size_t length);

Verification check_tight_cycle(const TightCycle& c, const Hypergraph3& h, const Coloring& col, Color color);
bool verify_tight_cycle(const TightCycle& c, const Hypergraph3& h, const Coloring& col, Color color);

Verification check_loose_cycle(const LooseCycle& c, const Hypergraph3& h, const Coloring& col, Color color);
bool verify_loose_cycle(const LooseCycle& c, const Hypergraph3& h, const Coloring& col, Color color);

// Both cycles valid in their colors, disjoint, uncovered = V(h) minus both.
Verification verify_cycle_pair(const CyclePair& p, const Hypergraph3& h, const Coloring& col);

// Every other edge e0, e2, ..., e{l-2}. Throws PreconditionError unless l is
// even and at least 6.
LooseCycle loose_from_tight(const TightCycle& c);

enum class SearchStatus { Found, Exhausted, Timeout };

std::string_view status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<CyclePair> pair;
  std::size_t nodes = 0;
};

struct SearchOptions {
  std::size_t max_uncovered = 0;
  Parity red = Parity::Any;
  Parity blue = Parity::Any;
  // Wall-clock budget; 0 means unlimited.
  std::size_t budget_ms = 0;
};

inline constexpr std::size_t kSearchCap = 16;

// Exact search. Among pairs meeting the parities and the uncovered bound,
// returns one with the fewest uncovered vertices; totals are tried from n
// down, and for each total the red cycle size descends. Red vertex sets are
// enumerated in colex order and tight paths extended depth-first with the
// smallest vertex first. Throws InstanceTooLarge above kSearchCap vertices.
SearchResult search_cycle_pair(const Hypergraph3& h, const Coloring& col, const SearchOptions& opt);

// Smallest achievable uncovered count, or nullopt if no pair meets the
// parities (or the budget ran out before an answer).
std::optional<std::size_t> min_uncovered(const Hypergraph3& h, const Coloring& col, Parity red, Parity blue,
                                         std::size_t budget_ms = 0);

nlohmann::json to_json(const TightCycle& c, Color color);
nlohmann::json to_json(const LooseCycle& c, Color color);
// {"kind":"cycles","n","status","red":{...},"blue":{...},"uncovered":[...]}
nlohmann::json to_json(const SearchResult& r, std::size_t n);
CyclePair cycle_pair_from_json(const nlohmann::json& doc);

}  // namespace rcover::cycles
