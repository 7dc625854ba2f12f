#include <cmath>

#include "rcover/matcher.hpp"

namespace rcover::matcher {

std::size_t ceil_count(double x) {
  if (x <= 0) return 0;
  return static_cast<std::size_t>(std::ceil(x));
}

Params Params::from_gamma(double gamma) {
  if (!(gamma > 0 && gamma < 1)) throw PreconditionError("gamma must lie in (0, 1)");
  Params p;
  p.gamma = gamma;
  const auto root = std::pow(gamma, 1.0 / 6.0);
  p.delta = 10 * root;
  p.coverage_bound = 290 * root;
  return p;
}

Thresholds Params::at(std::size_t t) const {
  const auto dt = delta * static_cast<double>(t);
  Thresholds th;
  th.t = t;
  th.delta_t = dt;
  th.six_delta_t = 6 * dt;
  th.two_delta_t = 2 * dt;
  th.eight_delta_t = 8 * dt;
  th.twelve_delta_t = 12 * dt;
  th.three_delta_t_plus_2 = 3 * dt + 2;
  th.six_delta_t_dissolve = 6 * dt;
  return th;
}

std::size_t Params::link_floor(std::size_t t) const {
  return ceil_count((1 - delta) * static_cast<double>(t));
}

CleanResult clean(const Hypergraph3& h, double gamma) {
  const auto p = Params::from_gamma(gamma);
  const auto n = h.universe();
  CleanReport report;
  report.input_vertices = h.vertex_count();

  auto current = h;
  std::vector<char> bad(binomial(n, 2), 0);
  while (true) {
    ++report.rounds;
    const auto floor = p.link_floor(current.vertex_count());

    std::fill(bad.begin(), bad.end(), 0);
    std::size_t bad_count = 0;
    for (Vertex y = 1; y < n; ++y) {
      for (Vertex x = 0; x < y; ++x) {
        const auto size = current.link_size(x, y);
        if (size > 0 && size < floor) {
          bad[pair_index({x, y})] = 1;
          ++bad_count;
        }
      }
    }

    std::vector<Triple> kept;
    kept.reserve(current.edge_count());
    for (const auto& t : current.edges()) {
      const auto pr = t.pairs();
      if (!bad[pair_index(pr[0])] && !bad[pair_index(pr[1])] && !bad[pair_index(pr[2])]) kept.push_back(t);
    }
    report.deactivated_pairs += bad_count;
    report.removed_edges += current.edge_count() - kept.size();

    // a vertex lies in an active pair iff it lies in an edge
    VertexSet alive(n);
    for (const auto& t : kept) {
      alive.insert(t.a);
      alive.insert(t.b);
      alive.insert(t.c);
    }
    alive &= current.vertices();
    for (auto v : current.vertices() - alive) report.deleted_vertices.push_back(v);

    const bool changed = bad_count > 0 || alive != current.vertices();
    current = Hypergraph3(std::move(alive), std::move(kept));
    if (!changed) break;
  }

  report.output_vertices = current.vertex_count();
  report.size_bound_held =
      static_cast<double>(report.output_vertices) >= (1 - p.delta) * static_cast<double>(report.input_vertices);
  std::sort(report.deleted_vertices.begin(), report.deleted_vertices.end());
  if (current.vertex_count() == 0) {
    throw CleanupExhausted("cleanup deleted every vertex (" + std::to_string(report.input_vertices) +
                               " in, link floor unreachable)",
                           std::move(report));
  }
  return {std::move(current), std::move(report)};
}

}  // namespace rcover::matcher
