#pragma once

// Triads, triangle counting, exact densities and the majority-colored
// reduced hypergraph over the classes of a vertex partition.

#include <array>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rcover/coloring.hpp"
#include "rcover/errors.hpp"

namespace rcover::reduced {

// Exact ratio num/den with den > 0.
struct Density {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  // num/den >= 1/2, decided in integers.
  bool at_least_half() const { return 2 * num >= den; }
  bool operator==(const Density& o) const { return num * o.den == o.num * den; }
};

// Tripartite graph on classes V_i, V_j, V_k. bip[0] = P^{ij}, bip[1] = P^{ik},
// bip[2] = P^{jk}; each pair is stored as (lo, hi) by vertex id.
struct Triad {
  std::array<std::vector<Vertex>, 3> classes;
  std::array<std::vector<VertexPair>, 3> bip;

  // Throws PreconditionError unless classes are disjoint and every pair of
  // bip[s] joins the two classes it belongs to.
  void validate() const;
  std::size_t universe() const;
};

// All {x,y,z}, x in V_i, y in V_j, z in V_k, pairwise adjacent; colex order.
std::vector<Triple> triangles(const Triad& p);

// |h ∩ T(P)| / |T(P)|. Throws UndefinedDensity when T(P) is empty.
Density density(const Hypergraph3& h, const Triad& p);
// Same over the union of the triangle sets. Every triad must share the
// classes of the first. Throws UndefinedDensity on an empty union.
Density density_tuple(const Hypergraph3& h, const std::vector<Triad>& qs);

// Classes V_1..V_t and chosen bipartite graphs P^{ij} keyed by (i, j), i < j.
struct PartitionSpec {
  std::vector<std::vector<Vertex>> classes;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<VertexPair>> bip;

  Triad triad(std::size_t i, std::size_t j, std::size_t k) const;
};

struct ReducedHypergraph {
  std::size_t t = 0;
  std::vector<Triple> edges;  // colex order over [t]
  std::vector<Color> colors;
  std::vector<Density> densities;  // density of the red class on each edge

  Coloring coloring() const;
};

// Edges are `regular_flags` when given (regularity is not tested here),
// otherwise every class triple whose triad has a triangle. Red iff the red
// density is at least 1/2.
ReducedHypergraph build_reduced(const PartitionSpec& partition, const Hypergraph3& h_red,
                                const std::optional<std::vector<Triple>>& regular_flags = std::nullopt);

// {"classes": [[v...]...], "bip": {"i,j": [[x,y]...]}} with 0-based class
// indices and i < j.
PartitionSpec partition_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const PartitionSpec& p);
// {"reduced": <h3json with colors>, "densities": [{"edge","num","den"}...]}
nlohmann::json to_json(const ReducedHypergraph& r);

// Direct-definition check that the bipartite graph between X and Y is
// (d, eps)-regular: |d(X',Y') - d| < eps for all X' ⊆ X, Y' ⊆ Y with
// |X'| > eps|X| and |Y'| > eps|Y|. d defaults to d(X,Y). Exhaustive, so
// |X|, |Y| <= 12 (PreconditionError otherwise).
bool is_regular_pair(const std::vector<Vertex>& x, const std::vector<Vertex>& y, const std::vector<VertexPair>& edges,
                     double eps, std::optional<double> d = std::nullopt);

}  // namespace rcover::reduced
