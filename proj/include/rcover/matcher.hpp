#pragma once

// Two disjoint monochromatic connected matchings covering almost all
// vertices of a 2-colored, almost complete 3-uniform hypergraph.
//
// Pipeline: clean() trims the host to a sub-hypergraph in which every
// active pair has a nearly full link; partition_rb() assigns each vertex a
// dominant monochromatic component; local_search_matching() grows a
// matching inside the two dominant components until no exchange move
// applies; when a large residual remains, the residual branch builds a
// perfect matching in the opposite color on the leftover vertices and
// dissolves the old matching of that color into new edges.

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcover/coloring.hpp"
#include "rcover/errors.hpp"
#include "rcover/verification.hpp"

namespace rcover::matcher {

// Round a real threshold up to a vertex count (negative thresholds -> 0).
std::size_t ceil_count(double x);

// Thresholds of the residual argument, evaluated at vertex count t.
struct Thresholds {
  std::size_t t = 0;
  double delta_t = 0;
  double six_delta_t = 0;     // |R| needed for a major red component
  double two_delta_t = 0;     // vertices of R outside the major component
  double eight_delta_t = 0;   // residual needed to enter the branch
  double twelve_delta_t = 0;  // residual below which the cover is done
  double three_delta_t_plus_2 = 0;
  double six_delta_t_dissolve = 0;  // vertices left uncovered by dissolution

  // The counting arguments say nothing once the largest threshold reaches t.
  bool vacuous() const { return twelve_delta_t >= static_cast<double>(t); }
};

struct Params {
  double gamma = 0;
  double delta = 0;           // 10 * gamma^(1/6)
  double coverage_bound = 0;  // 290 * gamma^(1/6)
  double eta_pm = 5.0 / 36.0;

  // Throws PreconditionError unless 0 < gamma < 1.
  static Params from_gamma(double gamma);

  Thresholds at(std::size_t t) const;
  // Smallest admissible link size ceil((1 - delta) t), never negative.
  std::size_t link_floor(std::size_t t) const;
};

// ---------------------------------------------------------------- cleanup

struct CleanReport {
  std::size_t input_vertices = 0;
  std::size_t output_vertices = 0;
  std::vector<Vertex> deleted_vertices;
  std::size_t deactivated_pairs = 0;
  std::size_t removed_edges = 0;
  std::size_t rounds = 0;
  // t_K >= (1 - delta) t_H. Reported, not assumed.
  bool size_bound_held = false;
};

class CleanupExhausted : public Error {
 public:
  CleanupExhausted(const std::string& what, CleanReport report) : Error(what), report_(std::move(report)) {}
  const CleanReport& report() const { return report_; }

 private:
  CleanReport report_;
};

struct CleanResult {
  Hypergraph3 k;
  CleanReport report;
};

// Iterated deletion to a fixpoint in which every vertex lies in an active
// pair and every active pair xy has |N(x,y)| >= ceil((1 - delta) t_K).
// Throws CleanupExhausted when nothing survives.
CleanResult clean(const Hypergraph3& h, double gamma);

// ----------------------------------------------------- monochromatic parts

// A tight component of one color class; ids are per color, in order of the
// component's colex-smallest edge.
struct ComponentRef {
  Color color = Color::Red;
  std::uint32_t id = 0;

  bool operator==(const ComponentRef&) const = default;
  auto operator<=>(const ComponentRef&) const = default;
};

// Color classes of a colored host and their tight components.
class MonoStructure {
 public:
  explicit MonoStructure(const Coloring& col);

  const Coloring& coloring() const { return col_; }
  const Hypergraph3& graph(Color c) const { return graph_[index(c)]; }
  const EdgePartition& components(Color c) const { return parts_[index(c)]; }
  std::optional<ComponentRef> component_of(const Triple& t) const;
  // The component as a hypergraph on the host's vertex set.
  Hypergraph3 component_graph(ComponentRef ref) const;

 private:
  static std::size_t index(Color c) { return c == Color::Red ? 0 : 1; }

  Coloring col_;
  std::array<Hypergraph3, 2> graph_;
  std::array<EdgePartition, 2> parts_;
};

struct PartitionRB {
  VertexSet red;   // R: vertices whose chosen component is red
  VertexSet blue;  // B
  // chosen[x] is C_x: the component maximizing |N_C(x)|, red before blue,
  // then smaller id. Empty for vertices without incident edges.
  std::vector<std::optional<ComponentRef>> chosen;
  std::vector<std::size_t> chosen_degree;  // |N_{C_x}(x)|
  VertexSet v_red;
  VertexSet v_blue;
  // Most frequent C_x over R, present only when |R| >= 6 delta t.
  std::optional<ComponentRef> major_red;
  std::optional<ComponentRef> major_blue;
  // Most frequent C_x over R (resp. B) without the size gate. Equal to the
  // major component whenever that exists; the matchings are grown here.
  std::optional<ComponentRef> target_red;
  std::optional<ComponentRef> target_blue;
  Thresholds thresholds;
  std::shared_ptr<const MonoStructure> mono;

  const VertexSet& side(Color c) const { return c == Color::Red ? red : blue; }
  const VertexSet& v(Color c) const { return c == Color::Red ? v_red : v_blue; }
  const std::optional<ComponentRef>& major(Color c) const { return c == Color::Red ? major_red : major_blue; }
  const std::optional<ComponentRef>& target(Color c) const { return c == Color::Red ? target_red : target_blue; }
};

PartitionRB partition_rb(const Hypergraph3& k, const Coloring& col, const Params& p);

// ---------------------------------------------------------------- matchings

struct ConnectedMatching {
  Color color = Color::Red;
  std::vector<Triple> edges;  // pairwise disjoint, colex order
  std::optional<std::uint32_t> component_id;
  // certificates[i] joins edges[i] to edges[i+1] inside the color class.
  std::vector<PseudoPath> certificates;

  VertexSet covered(std::size_t universe) const;
};

// Sorts the edges and attaches shortest certificates inside the color class
// of `mono`. Throws Error if the edges do not share one component.
ConnectedMatching certify(const MonoStructure& mono, Color color, std::vector<Triple> edges);

struct MatchingPair {
  ConnectedMatching red{Color::Red, {}, std::nullopt, {}};
  ConnectedMatching blue{Color::Blue, {}, std::nullopt, {}};

  ConnectedMatching& of(Color c) { return c == Color::Red ? red : blue; }
  const ConnectedMatching& of(Color c) const { return c == Color::Red ? red : blue; }
  VertexSet covered(std::size_t universe) const;
};

struct Move {
  enum class Kind { GreedyAdd, OneForTwo, TwoForThree };
  Kind kind;
  std::vector<Triple> removed;
  std::vector<Triple> added;
  std::size_t covered_after = 0;
};

std::string_view move_name(Move::Kind kind);

struct LocalSearchResult {
  MatchingPair matchings;
  std::vector<Move> moves;
};

// Grows M_red inside target_red and M_blue inside target_blue until none of
// the exchange moves applies:
//   greedy add    - a target edge on three uncovered vertices;
//   one for two   - drop one matching edge, add two disjoint target edges;
//   two for three - drop two matching edges, add three disjoint target edges.
// Every move gains exactly three covered vertices. Candidates are scanned in
// colex order and the first improving move is applied.
LocalSearchResult local_search_matching(const Hypergraph3& k, const Coloring& col, const PartitionRB& part,
                                        const Params& p);

class GoodUndefined : public Error {
 public:
  using Error::Error;
};

// One pair of e in the shadow of the major red component and a different
// pair in the shadow of the major blue component. Throws GoodUndefined when
// either major component is absent.
bool good_edge(const Hypergraph3& k, const Coloring& col, const PartitionRB& part, const Triple& e);

class BranchInapplicable : public Error {
 public:
  using Error::Error;
};

struct ResidualComponent {
  Triple anchor;            // colex-smallest edge of the other color inside V'
  VertexSet residual;       // V'' (V' minus vertices w with w·anchor.a outside the major shadow)
  Hypergraph3 b_prime;      // component of the anchor, trimmed to a multiple of 3 vertices
  VertexSet trimmed;        // 0..2 largest ids removed
  ComponentRef host_component;  // component of K containing the anchor
};

// Residual branch for orientation `primary` (the color whose residual V' is
// large): builds the opposite-colored component of K[V''] through the anchor
// edge. Throws BranchInapplicable when there is no anchor edge or the anchor
// does not survive into V''.
ResidualComponent blue_residual_component(const Hypergraph3& k, const Coloring& col, const PartitionRB& part,
                                          const MatchingPair& m, const Params& p, Color primary = Color::Red);

struct DegreeCheck {
  std::size_t min_degree = 0;
  double hypothesis = 0;    // (5/9 + 5/36) C(n,2)
  double strengthened = 0;  // 25/36 C(n,2)
  bool holds = false;       // min_degree >= hypothesis
};

DegreeCheck degree_condition(const Hypergraph3& b, double eta = 5.0 / 36.0);

struct PerfectMatchingReport {
  std::optional<std::vector<Triple>> matching;
  // Search finished: an absent matching is then a proof of non-existence.
  bool exhausted = true;
  std::size_t nodes = 0;
  DegreeCheck degree;
};

// Exact backtracking on the smallest uncovered vertex, candidate edges in
// colex order, with memoized dead states. Throws PreconditionError unless
// the vertex count is a multiple of 3.
PerfectMatchingReport perfect_matching_dense(const Hypergraph3& b, std::size_t node_budget = 4'000'000);

struct MaximumMatching {
  std::vector<Triple> edges;
  bool exact = true;
};

// Maximum matching by memoized branch and bound; falls back to the better of
// the best found and a greedy matching when the node budget runs out.
MaximumMatching maximum_matching(const Hypergraph3& b, std::size_t node_budget = 4'000'000);

struct Dissolution {
  std::vector<Triple> rematched;  // new edges of the primary color
  VertexSet leftovers;
};

// Splits each edge uvw of `m_other` (u < v < w) into the pair uv and the
// vertex w, then greedily, pairs in colex order, joins uv to the smallest
// unused w' with uvw' an edge of the primary color and uw' in the shadow of
// the major primary component. Throws BranchInapplicable unless every edge
// lies inside V_primary.
Dissolution dissolve_blue(const Hypergraph3& k, const Coloring& col, const PartitionRB& part,
                          const ConnectedMatching& m_other, Color primary = Color::Red);

// ---------------------------------------------------------------- pipeline

struct TraceRecord {
  std::string stage;
  std::string detail;
};

struct CoverResult {
  MatchingPair matchings;
  std::size_t covered = 0;
  VertexSet uncovered;
  std::vector<TraceRecord> trace;
  std::vector<std::pair<std::string, double>> timings_ms;

  const ConnectedMatching& red() const { return matchings.red; }
  const ConnectedMatching& blue() const { return matchings.blue; }
};

// Full pipeline. Propagates CleanupExhausted; every other failure inside a
// residual branch falls back to the best valid result seen.
CoverResult cover(const Hypergraph3& h, const Coloring& col, double gamma);

Verification verify_cover(const CoverResult& r, const Hypergraph3& h, const Coloring& col);

// JSON layout: {"kind":"cover","n",...,"red":{...},"blue":{...},"covered",
// "uncovered","trace":[{stage,detail}],"timing":{...}}.
nlohmann::json to_json(const CoverResult& r);
CoverResult cover_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ConnectedMatching& m);
ConnectedMatching matching_from_json(const nlohmann::json& doc, Color expected);

}  // namespace rcover::matcher
