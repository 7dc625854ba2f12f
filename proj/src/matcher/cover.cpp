#include <algorithm>
#include <chrono>
#include <sstream>

#include "rcover/io.hpp"
#include "rcover/matcher.hpp"

namespace rcover::matcher {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  explicit Stopwatch(CoverResult& r) : r_(r), start_(Clock::now()) {}

  void lap(std::string stage) {
    const auto now = Clock::now();
    r_.timings_ms.emplace_back(std::move(stage), std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  CoverResult& r_;
  Clock::time_point start_;
};

std::string describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

void finish(CoverResult& r, const Hypergraph3& h) {
  const auto covered = r.matchings.covered(h.universe());
  r.covered = covered.size();
  r.uncovered = h.vertices() - covered;
}

// Counts of M_other edges meeting V_other in >= 2 and in exactly 1 vertex.
std::string structural_check(const PartitionRB& part, const MatchingPair& m, Color primary) {
  const auto other = opposite(primary);
  const auto& inside = part.v(other);
  std::size_t many = 0, one = 0;
  for (const auto& e : m.of(other).edges) {
    const auto hits = inside.contains(e.a) + inside.contains(e.b) + inside.contains(e.c);
    many += hits >= 2;
    one += hits == 1;
  }
  std::ostringstream out;
  out << color_name(other) << " edges with >=2 vertices in V_" << color_name(other) << ": " << many
      << ", with exactly 1: " << one << (many + one == 0 ? " (holds)" : " (violated)");
  return out.str();
}

struct Candidate {
  std::string label;
  MatchingPair m;
};

}  // namespace

CoverResult cover(const Hypergraph3& h, const Coloring& col, double gamma) {
  const auto p = Params::from_gamma(gamma);
  const auto n = h.universe();
  CoverResult r;
  r.uncovered = VertexSet(n);
  Stopwatch clock(r);
  auto log = [&r](std::string stage, std::string detail) { r.trace.push_back({std::move(stage), std::move(detail)}); };

  auto [k, report] = clean(h, gamma);
  {
    std::ostringstream out;
    out << "t_H=" << report.input_vertices << " t_K=" << report.output_vertices
        << " deleted=" << report.deleted_vertices.size() << " deactivated_pairs=" << report.deactivated_pairs
        << " rounds=" << report.rounds << " size_bound=" << (report.size_bound_held ? "held" : "failed");
    log("clean", out.str());
  }
  clock.lap("clean");

  const auto col_k = col.restricted_to(k);
  const auto part = partition_rb(k, col_k, p);
  const auto& th = part.thresholds;
  {
    std::ostringstream out;
    out << "|R|=" << part.red.size() << " |B|=" << part.blue.size() << " |V_red|=" << part.v_red.size()
        << " |V_blue|=" << part.v_blue.size() << " delta*t=" << th.delta_t
        << (th.vacuous() ? " thresholds vacuous" : "");
    log("partition", out.str());
  }
  clock.lap("partition");

  auto ls = local_search_matching(k, col_k, part, p);
  for (const auto& m : ls.moves) {
    std::ostringstream out;
    out << move_name(m.kind);
    for (const auto& e : m.removed) out << " -" << to_string(e);
    for (const auto& e : m.added) out << " +" << to_string(e);
    out << " covered=" << m.covered_after;
    log("move", out.str());
  }
  {
    std::ostringstream out;
    out << "moves=" << ls.moves.size() << " red_edges=" << ls.matchings.red.edges.size()
        << " blue_edges=" << ls.matchings.blue.edges.size();
    log("local-search", out.str());
  }
  clock.lap("local-search");

  r.matchings = ls.matchings;
  finish(r, h);

  const auto covered = ls.matchings.covered(n);
  const auto residual_red = (part.v_red - covered).size();
  const auto residual_blue = (part.v_blue - covered).size();
  const auto done_below = ceil_count(th.twelve_delta_t);
  if (residual_red < done_below && residual_blue < done_below) {
    std::ostringstream out;
    out << "|V_red'|=" << residual_red << " |V_blue'|=" << residual_blue << " < " << done_below;
    log("early-exit", out.str());
    clock.lap("branch");
    return r;
  }

  std::vector<Candidate> candidates;
  for (auto primary : {Color::Red, Color::Blue}) {
    const auto other = opposite(primary);
    const auto stage = std::string("branch-") + std::string(color_name(primary));
    const auto residual = primary == Color::Red ? residual_red : residual_blue;
    if (residual < ceil_count(th.eight_delta_t)) {
      log(stage, "skipped: residual " + std::to_string(residual) + " below " +
                     std::to_string(ceil_count(th.eight_delta_t)));
      continue;
    }
    if (th.vacuous()) log(stage, "structural checks skipped (thresholds vacuous)");
    else log(stage, structural_check(part, ls.matchings, primary));

    try {
      const auto rc = blue_residual_component(k, col_k, part, ls.matchings, p, primary);
      log(stage, "anchor " + to_string(rc.anchor) + " |V''|=" + std::to_string(rc.residual.size()) +
                     " |V(B')|=" + std::to_string(rc.b_prime.vertex_count()) + " trimmed=" + describe(rc.trimmed));

      std::vector<Triple> fresh;
      const auto pm = perfect_matching_dense(rc.b_prime);
      {
        std::ostringstream out;
        out << "min_degree=" << pm.degree.min_degree << " hypothesis=" << pm.degree.hypothesis
            << (pm.degree.holds ? " (met)" : " (not met)") << " nodes=" << pm.nodes;
        if (pm.matching) {
          out << " perfect matching of " << pm.matching->size() << " edges";
          fresh = *pm.matching;
        } else {
          const auto mm = maximum_matching(rc.b_prime);
          out << (pm.exhausted ? " no perfect matching" : " search budget exhausted") << ", maximum matching of "
              << mm.edges.size() << " edges" << (mm.exact ? "" : " (greedy)");
          fresh = mm.edges;
        }
        log(stage, out.str());
      }

      const auto& keep = ls.matchings.of(primary).edges;
      const auto& old = ls.matchings.of(other).edges;
      auto make = [&](std::string label, std::vector<Triple> prim, std::vector<Triple> oth) {
        Candidate c{std::move(label), {}};
        c.m.of(primary) = certify(*part.mono, primary, std::move(prim));
        c.m.of(other) = certify(*part.mono, other, std::move(oth));
        return c;
      };
      auto attempt = [&](std::string label, std::vector<Triple> prim, std::vector<Triple> oth) {
        try {
          candidates.push_back(make(label, std::move(prim), std::move(oth)));
        } catch (const Error& e) {
          log(stage, label + " rejected: " + e.what());
        }
      };

      try {
        const auto dis = dissolve_blue(k, col_k, part, ls.matchings.of(other), primary);
        log(stage, "dissolved into " + std::to_string(dis.rematched.size()) + " edges, leftovers " +
                       describe(dis.leftovers));
        auto prim = keep;
        prim.insert(prim.end(), dis.rematched.begin(), dis.rematched.end());
        attempt(stage + ":dissolve", std::move(prim), fresh);
      } catch (const BranchInapplicable& e) {
        log(stage, std::string("dissolve inapplicable: ") + e.what());
      }
      attempt(stage + ":drop", keep, fresh);
      {
        auto oth = old;
        oth.insert(oth.end(), fresh.begin(), fresh.end());
        attempt(stage + ":union", keep, std::move(oth));
      }
    } catch (const Error& e) {
      log(stage, std::string("fallback: ") + e.what());
    }
  }

  for (auto& c : candidates) {
    CoverResult trial;
    trial.matchings = c.m;
    finish(trial, h);
    if (!verify_cover(trial, h, col).valid) {
      log("assemble", c.label + " failed verification");
      continue;
    }
    if (trial.covered > r.covered) {
      log("assemble", c.label + " improves coverage " + std::to_string(r.covered) + " -> " +
                          std::to_string(trial.covered));
      r.matchings = std::move(c.m);
      finish(r, h);
    }
  }
  log("assemble", "covered=" + std::to_string(r.covered));
  clock.lap("branch");
  return r;
}

Verification verify_cover(const CoverResult& r, const Hypergraph3& h, const Coloring& col) {
  Verification v;
  auto fail = [&v](std::string msg) { v.fail(std::move(msg)); };
  const auto n = h.universe();
  if (col.host().universe() != n) fail("coloring universe differs from the host");

  std::array<VertexSet, 2> used{VertexSet(n), VertexSet(n)};
  for (auto c : {Color::Red, Color::Blue}) {
    const auto& m = r.matchings.of(c);
    const auto name = std::string(color_name(c));
    auto& seen = used[c == Color::Red ? 0 : 1];
    if (m.color != c) fail("color purity: " + name + " slot holds a " + std::string(color_name(m.color)) + " matching");

    for (const auto& e : m.edges) {
      if (e.c >= n) {
        fail("edge " + to_string(e) + " lies outside the vertex range");
        continue;
      }
      if (!h.contains(e)) fail("edge " + to_string(e) + " of the " + name + " matching is not a host edge");
      else if (!col.has_color(e, c)) fail("color purity: " + to_string(e) + " is not " + name);
      for (auto x : e.vertices()) {
        if (seen.contains(x)) fail("matching disjointness: vertex " + std::to_string(x) + " repeats in the " + name + " matching");
        seen.insert(x);
      }
    }

    const auto expected = m.edges.empty() ? 0 : m.edges.size() - 1;
    if (m.certificates.size() != expected) {
      fail("certificate count: " + name + " matching has " + std::to_string(m.certificates.size()) +
           " certificates, expected " + std::to_string(expected));
      continue;
    }
    for (std::size_t i = 0; i < m.certificates.size(); ++i) {
      const auto& path = m.certificates[i];
      const auto label = name + " certificate " + std::to_string(i);
      if (path.empty() || path.front() != m.edges[i] || path.back() != m.edges[i + 1]) {
        fail(label + " does not join consecutive matching edges");
        continue;
      }
      if (!is_pseudo_path(path)) fail(label + " is not a pseudo-path");
      for (const auto& e : path) {
        if (e.c >= n || !h.contains(e)) fail(label + " uses non-edge " + to_string(e));
        else if (!col.has_color(e, c)) fail("certificate color: " + label + " uses " + to_string(e) + " which is not " + name);
      }
    }
  }

  const auto shared = used[0] & used[1];
  if (!shared.empty()) fail("disjointness: red and blue matchings share " + describe(shared));
  const auto all = used[0] | used[1];
  if (!all.is_subset_of(h.vertices())) fail("covered vertices outside V(H): " + describe(all - h.vertices()));
  if (r.covered != all.size())
    fail("covered count: reported " + std::to_string(r.covered) + ", matchings cover " + std::to_string(all.size()));
  if (r.uncovered.words().size() != all.words().size() || r.uncovered != h.vertices() - all)
    fail("uncovered set does not equal V(H) minus the covered vertices");
  return v;
}

nlohmann::json to_json(const ConnectedMatching& m) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : m.edges) edges.push_back(triple_json(e));
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& path : m.certificates) {
    nlohmann::json seq = nlohmann::json::array();
    for (const auto& e : path) seq.push_back(triple_json(e));
    certs.push_back(std::move(seq));
  }
  return {{"color", std::string(color_name(m.color))},
          {"component", m.component_id ? nlohmann::json(*m.component_id) : nlohmann::json(nullptr)},
          {"edges", std::move(edges)},
          {"certificates", std::move(certs)}};
}

ConnectedMatching matching_from_json(const nlohmann::json& doc, Color expected) {
  if (!doc.is_object()) throw ParseError("matching must be an object");
  ConnectedMatching m{expected, {}, std::nullopt, {}};
  const auto color = doc.value("color", std::string(color_name(expected)));
  if (color != color_name(expected)) throw ParseError("expected a " + std::string(color_name(expected)) + " matching");
  if (doc.contains("component") && !doc["component"].is_null()) m.component_id = doc["component"].get<std::uint32_t>();
  for (const auto& e : doc.at("edges")) m.edges.push_back(triple_from_json(e));
  if (doc.contains("certificates")) {
    for (const auto& seq : doc["certificates"]) {
      PseudoPath path;
      for (const auto& e : seq) path.push_back(triple_from_json(e));
      m.certificates.push_back(std::move(path));
    }
  }
  return m;
}

nlohmann::json to_json(const CoverResult& r) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& t : r.trace) trace.push_back({{"stage", t.stage}, {"detail", t.detail}});
  nlohmann::json timing = nlohmann::json::object();
  for (const auto& [stage, ms] : r.timings_ms) timing[stage] = ms;
  return {{"kind", "cover"},
          {"n", r.uncovered.universe()},
          {"red", to_json(r.matchings.red)},
          {"blue", to_json(r.matchings.blue)},
          {"covered", r.covered},
          {"uncovered", r.uncovered.to_vector()},
          {"trace", std::move(trace)},
          {"timing", std::move(timing)}};
}

CoverResult cover_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("cover result must be an object");
    if (doc.value("kind", std::string("cover")) != "cover") throw ParseError("not a cover result");
    const auto n = doc.at("n").get<std::size_t>();
    CoverResult r;
    r.matchings.red = matching_from_json(doc.at("red"), Color::Red);
    r.matchings.blue = matching_from_json(doc.at("blue"), Color::Blue);
    r.covered = doc.at("covered").get<std::size_t>();
    r.uncovered = VertexSet(n);
    for (const auto& v : doc.at("uncovered")) {
      const auto x = v.get<Vertex>();
      if (x >= n) throw ParseError("uncovered vertex " + std::to_string(x) + " out of range");
      r.uncovered.insert(x);
    }
    if (doc.contains("trace"))
      for (const auto& t : doc["trace"]) r.trace.push_back({t.at("stage").get<std::string>(), t.at("detail").get<std::string>()});
    if (doc.contains("timing"))
      for (const auto& [stage, ms] : doc["timing"].items()) r.timings_ms.emplace_back(stage, ms.get<double>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed cover result: ") + e.what());
  }
}

}  // namespace rcover::matcher
