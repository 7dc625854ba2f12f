#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcover/cycles.hpp"
#include "rcover/io.hpp"
#include "rcover/matcher.hpp"
#include "rcover/oracle.hpp"
#include "rcover/random.hpp"
#include "rcover/reduced.hpp"

namespace rcover::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || p != end) throw UsageError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

double parse_real(const std::string& s, std::string_view what) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw UsageError("bad " + std::string(what) + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

// "A..B" (inclusive) or a single value.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s, std::string_view what) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_uint(s, what);
    return {v, v};
  }
  const auto lo = parse_uint(std::string_view(s).substr(0, dots), what);
  const auto hi = parse_uint(std::string_view(s).substr(dots + 2), what);
  if (lo > hi) throw UsageError(std::string(what) + " range is empty: " + s);
  return {lo, hi};
}

// "6,7,8" or "6..8".
std::vector<std::size_t> parse_sizes(const std::string& s, std::string_view what) {
  std::vector<std::size_t> out;
  for (const auto& part : split(s, ',')) {
    const auto [lo, hi] = parse_range(part, what);
    for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

std::pair<cycles::Parity, cycles::Parity> parse_parity_flag(const std::string& s) {
  std::pair p{cycles::Parity::Any, cycles::Parity::Any};
  if (s.empty()) return p;
  for (const auto& part : split(s, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--parity expects red=X,blue=Y, got '" + s + "'");
    const auto key = part.substr(0, eq);
    const auto value = cycles::parse_parity(part.substr(eq + 1));
    if (key == "red") p.first = value;
    else if (key == "blue") p.second = value;
    else throw UsageError("--parity: unknown color '" + key + "'");
  }
  return p;
}

Color parse_color(const std::string& s) {
  if (s == "red" || s == "R") return Color::Red;
  if (s == "blue" || s == "B") return Color::Blue;
  throw UsageError("unknown color '" + s + "'");
}

std::string format_real(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RCOVER_THREADS")) {
    const auto v = parse_uint(env, "RCOVER_THREADS");
    if (v == 0) throw UsageError("RCOVER_THREADS must be positive");
    n = static_cast<std::size_t>(v);
  }
  return n;
}

// Runs job(i) for i in [0, count) on a pool; results land by index.
template <class Job>
void parallel_for(std::size_t count, Job job) {
  const auto workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    for (auto i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct Output {
  std::string path;
  std::ostream& fallback;

  void write(const std::string& bytes) const {
    if (path.empty()) fallback << bytes;
    else write_file(path, bytes);
  }
  void write(const json& doc) const { write(doc.dump(2) + "\n"); }
};

Coloring require_coloring(const Instance& inst, std::string_view path) {
  if (!inst.coloring) throw ParseError(std::string(path) + " carries no coloring");
  return *inst.coloring;
}

// Instance generation shared by gen and sweep.
struct ModelSpec {
  std::string model = "uniform";
  double p = 0.5;
  std::string sizes;
  std::string color = "red";
  std::string input;

  void validate() const {
    if (model == "uniform") {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--p must lie in [0,1]");
    } else if (model == "planted") {
      if (sizes.empty()) throw UsageError("--model planted needs --sizes");
    } else if (model == "mono") {
      parse_color(color);
    } else if (model == "file") {
      if (input.empty()) throw UsageError("--model file needs --input");
    } else {
      throw UsageError("unknown model '" + model + "' (uniform, planted, mono, file)");
    }
  }

  Coloring make(std::size_t size, std::uint64_t seed) const {
    if (model != "planted" && model != "file" && size < 4) throw UsageError("--n must be at least 4");
    if (model == "uniform") return uniform_coloring(size, p, seed);
    if (model == "mono") return monochromatic_coloring(size, parse_color(color));
    if (model == "planted") return planted_partition_coloring(parse_sizes(sizes, "--sizes"));
    return require_coloring(load_instance(input), input);
  }
};

void add_model_flags(CLI::App* cmd, ModelSpec& m) {
  cmd->add_option("--model", m.model, "uniform | planted | mono | file")->capture_default_str();
  cmd->add_option("--p", m.p, "red probability for the uniform model")->capture_default_str();
  cmd->add_option("--sizes", m.sizes, "class sizes for the planted model, e.g. 4,4,4");
  cmd->add_option("--color", m.color, "color for the mono model")->capture_default_str();
}

// ---- verify ----------------------------------------------------------------

struct Verdict {
  bool valid = true;
  std::vector<std::string> diagnostics;
};

Verdict from(const Verification& v) { return {v.valid, v.diagnostics}; }

Verdict verify_perfect(const json& doc, const Hypergraph3& h) {
  Verdict out;
  if (!doc.contains("witness")) return out;
  VertexSet seen(h.universe());
  std::size_t count = 0;
  for (const auto& e : doc["witness"]) {
    const auto t = triple_from_json(e);
    if (!h.contains(t)) out.diagnostics.push_back(to_string(t) + " is not an edge");
    for (auto v : t.vertices()) {
      if (seen.contains(v)) out.diagnostics.push_back("vertex " + std::to_string(v) + " used twice");
      seen.insert(v);
    }
    ++count;
  }
  if (3 * count != h.vertex_count()) out.diagnostics.push_back("witness does not cover every vertex");
  out.valid = out.diagnostics.empty();
  return out;
}

Verdict verify_sweep_csv(const std::string& text) {
  Verdict out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  const auto header = split(line, ',');
  const auto col = std::find(header.begin(), header.end(), "valid");
  if (col == header.end()) throw ParseError("sweep CSV has no 'valid' column");
  const auto k = static_cast<std::size_t>(col - header.begin());
  for (std::size_t row = 1; std::getline(in, line); ++row) {
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw ParseError("sweep CSV row " + std::to_string(row) + " is malformed");
    if (cells[k] != "true") out.diagnostics.push_back("row " + std::to_string(row) + " is invalid");
  }
  out.valid = out.diagnostics.empty();
  return out;
}

Verdict verify_document(const json& doc, const std::string& input, const std::string& partition) {
  const auto kind = doc.value("kind", std::string());
  auto load = [&] {
    if (input.empty()) throw UsageError("verifying a '" + kind + "' result needs --input");
    return load_instance(input);
  };
  if (kind == "cover") {
    const auto inst = load();
    const auto col = require_coloring(inst, input);
    return from(matcher::verify_cover(matcher::cover_from_json(doc), inst.host, col));
  }
  if (kind == "cycles") {
    if (!doc.contains("red")) return {};  // absent or timed out: nothing to check
    const auto inst = load();
    const auto col = require_coloring(inst, input);
    return from(cycles::verify_cycle_pair(cycles::cycle_pair_from_json(doc), inst.host, col));
  }
  if (kind == "oracle") {
    const auto which = doc.value("oracle", std::string());
    const auto inst = load();
    if (which == "matching") {
      const auto col = require_coloring(inst, input);
      auto witness = doc.at("witness");
      const auto r = matcher::cover_from_json(witness);
      auto v = from(matcher::verify_cover(r, inst.host, col));
      if (r.covered != doc.at("optimum").get<std::size_t>()) {
        v.valid = false;
        v.diagnostics.push_back("witness coverage differs from the reported optimum");
      }
      return v;
    }
    if (which == "cycles") {
      if (!doc.contains("witness")) return {};
      const auto col = require_coloring(inst, input);
      return from(cycles::verify_cycle_pair(cycles::cycle_pair_from_json(doc["witness"]), inst.host, col));
    }
    if (which == "perfect") {
      if (doc.contains("color")) {
        const auto col = require_coloring(inst, input);
        return verify_perfect(doc, col.subgraph(parse_color(doc["color"].get<std::string>())));
      }
      return verify_perfect(doc, inst.host);
    }
    throw ParseError("unknown oracle '" + which + "'");
  }
  if (kind == "reduced") {
    if (partition.empty()) throw UsageError("verifying a reduced hypergraph needs --partition");
    const auto inst = load();
    const auto col = require_coloring(inst, input);
    const auto spec = reduced::partition_from_json(json::parse(read_file(partition)));
    auto expect = reduced::to_json(reduced::build_reduced(spec, col.subgraph(Color::Red)));
    expect["kind"] = "reduced";
    if (expect == doc) return {};
    return {false, {"reduced hypergraph differs from recomputation"}};
  }
  if (kind == "sweep") {
    Verdict out;
    for (const auto& r : doc.at("records"))
      if (!r.at("valid").get<bool>())
        out.diagnostics.push_back("seed " + std::to_string(r.at("seed").get<std::uint64_t>()) + " n " +
                                  std::to_string(r.at("n").get<std::size_t>()) + " is invalid");
    out.valid = out.diagnostics.empty();
    return out;
  }
  throw ParseError("unrecognised result kind '" + kind + "'");
}

// ---- sweep -----------------------------------------------------------------

struct RunRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double gamma = 0;
  std::size_t covered = 0;
  std::size_t uncovered = 0;
  std::size_t red_edges = 0;
  std::size_t blue_edges = 0;
  bool valid = false;
  std::vector<std::pair<std::string, double>> timings_ms;
};

RunRecord run_one(const Coloring& col, double gamma, std::uint64_t seed) {
  const auto r = matcher::cover(col.host(), col, gamma);
  RunRecord rec;
  rec.seed = seed;
  rec.n = col.host().universe();
  rec.gamma = gamma;
  rec.covered = r.covered;
  rec.uncovered = r.uncovered.size();
  rec.red_edges = r.red().edges.size();
  rec.blue_edges = r.blue().edges.size();
  rec.valid = matcher::verify_cover(r, col.host(), col).valid;
  rec.timings_ms = r.timings_ms;
  return rec;
}

const char* kStages[] = {"clean", "partition", "local-search", "branch"};

std::string sweep_csv(const std::vector<RunRecord>& records, bool timing) {
  std::ostringstream os;
  os << "seed,n,gamma,covered,uncovered_count,red_edges,blue_edges,valid";
  if (timing)
    for (auto s : kStages) os << ',' << s << "_ms";
  os << '\n';
  for (const auto& r : records) {
    os << r.seed << ',' << r.n << ',' << format_real(r.gamma) << ',' << r.covered << ',' << r.uncovered << ','
       << r.red_edges << ',' << r.blue_edges << ',' << (r.valid ? "true" : "false");
    if (timing)
      for (auto s : kStages) {
        double ms = 0;
        for (const auto& [stage, v] : r.timings_ms)
          if (stage == s) ms = v;
        os << ',' << std::fixed << std::setprecision(3) << ms << std::defaultfloat;
      }
    os << '\n';
  }
  return os.str();
}

json sweep_json(const std::vector<RunRecord>& records, bool timing) {
  json list = json::array();
  for (const auto& r : records) {
    json rec{{"seed", r.seed},          {"n", r.n},
             {"gamma", r.gamma},        {"covered", r.covered},
             {"uncovered_count", r.uncovered}, {"red_edges", r.red_edges},
             {"blue_edges", r.blue_edges}, {"valid", r.valid}};
    if (timing) {
      json t = json::object();
      for (const auto& [stage, ms] : r.timings_ms) t[stage] = ms;
      rec["timing"] = std::move(t);
    }
    list.push_back(std::move(rec));
  }
  return {{"kind", "sweep"}, {"records", std::move(list)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rcover: monochromatic connected matchings and tight cycles in 2-colored 3-graphs"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string out_path, input, format, partition;
  std::uint64_t seed = 1;
  double gamma = 1e-6;
  std::size_t n = 0;
  ModelSpec model;

  auto* gen = app.add_subcommand("gen", "generate a colored instance");
  add_model_flags(gen, model);
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--seed", seed)->capture_default_str();
  gen->add_option("--format", format, "h3bits (default) or json");
  gen->add_option("--out", out_path);

  auto* solve = app.add_subcommand("solve", "cover with two monochromatic connected matchings");
  solve->add_option("--input", input)->required();
  solve->add_option("--gamma", gamma)->capture_default_str();
  solve->add_option("--out", out_path);

  std::size_t max_uncovered = 0;
  bool max_given = false;
  std::string parity;
  std::size_t budget_ms = 0;
  auto* cyc = app.add_subcommand("cycles", "search two disjoint monochromatic tight cycles");
  cyc->add_option("--input", input)->required();
  cyc->add_option("--max-uncovered", max_uncovered, "defaults to n")->each([&](const std::string&) { max_given = true; });
  cyc->add_option("--parity", parity, "red=any|even|odd,blue=...");
  cyc->add_option("--budget-ms", budget_ms, "0 means unlimited")->capture_default_str();
  cyc->add_option("--out", out_path);

  std::string kind = "matching", restrict_color;
  auto* orc = app.add_subcommand("oracle", "exhaustive ground truth on small instances");
  orc->add_option("--input", input)->required();
  orc->add_option("--kind", kind, "matching | cycles | perfect")->capture_default_str();
  orc->add_option("--parity", parity, "for --kind cycles");
  orc->add_option("--color", restrict_color, "for --kind perfect: use one color class");
  orc->add_option("--out", out_path);

  std::string result_path;
  auto* ver = app.add_subcommand("verify", "check a result file");
  ver->add_option("result", result_path, "result or instance file")->required();
  ver->add_option("--input", input, "instance the result refers to");
  ver->add_option("--partition", partition, "partition file, for reduced results");

  auto* red = app.add_subcommand("reduce", "triad densities and the reduced hypergraph");
  red->add_option("--input", input)->required();
  red->add_option("--partition", partition)->required();
  red->add_option("--out", out_path);

  std::string ns = "12", seeds = "1..10", gammas = "1e-6";
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "run the matcher over a seed range");
  add_model_flags(sweep, model);
  sweep->add_option("--input", model.input, "instance for --model file");
  sweep->add_option("--n", ns, "sizes, e.g. 6,7,8 or 6..8")->capture_default_str();
  sweep->add_option("--seeds", seeds, "A..B inclusive")->capture_default_str();
  sweep->add_option("--gamma", gammas, "one or more, comma separated")->capture_default_str();
  sweep->add_option("--format", format, "csv (default) or json");
  sweep->add_flag("--timing", timing, "include stage timings");
  sweep->add_option("--out", out_path);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  const Output sink{out_path, out};
  try {
    if (*gen) {
      model.validate();
      if (model.model == "file") throw UsageError("gen does not take --model file");
      const auto col = model.make(n, seed);
      if (format.empty() || format == "h3bits") sink.write(to_h3bits(col));
      else if (format == "json") sink.write(to_h3json(col));
      else throw UsageError("gen --format is h3bits or json");
      return kOk;
    }
    if (*solve) {
      const auto inst = load_instance(input);
      const auto col = require_coloring(inst, input);
      sink.write(matcher::to_json(matcher::cover(inst.host, col, gamma)));
      return kOk;
    }
    if (*cyc) {
      const auto inst = load_instance(input);
      const auto col = require_coloring(inst, input);
      const auto [pr, pb] = parse_parity_flag(parity);
      const auto limit = max_given ? max_uncovered : inst.host.vertex_count();
      const auto r = cycles::search_cycle_pair(inst.host, col, {limit, pr, pb, budget_ms});
      sink.write(cycles::to_json(r, inst.host.universe()));
      return r.status == cycles::SearchStatus::Found ? kOk : kAbsent;
    }
    if (*orc) {
      const auto inst = load_instance(input);
      if (kind == "matching") {
        const auto col = require_coloring(inst, input);
        sink.write(oracle::to_json(oracle::oracle_matching_cover(inst.host, col)));
        return kOk;
      }
      if (kind == "cycles") {
        const auto col = require_coloring(inst, input);
        const auto [pr, pb] = parse_parity_flag(parity);
        const auto r = oracle::oracle_cycle_pair(inst.host, col, pr, pb);
        sink.write(oracle::to_json(r, inst.host.universe(), pr, pb));
        return r.optimum ? kOk : kAbsent;
      }
      if (kind == "perfect") {
        auto h = inst.host;
        if (!restrict_color.empty()) h = require_coloring(inst, input).subgraph(parse_color(restrict_color));
        const auto r = oracle::oracle_perfect_matching(h);
        auto doc = oracle::to_json(r);
        if (!restrict_color.empty()) doc["color"] = std::string(color_name(parse_color(restrict_color)));
        sink.write(doc);
        return r.exists ? kOk : kAbsent;
      }
      throw UsageError("--kind is matching, cycles or perfect");
    }
    if (*ver) {
      const auto bytes = read_file(result_path);
      Verdict v;
      if (bytes.rfind("seed,", 0) == 0) {
        v = verify_sweep_csv(bytes);
      } else {
        const auto doc = json::parse(bytes, nullptr, false);
        if (!doc.is_discarded() && doc.is_object() && doc.contains("kind")) {
          v = verify_document(doc, input, partition);
        } else {
          parse_instance(bytes);  // throws ParseError when malformed
        }
      }
      if (v.valid) {
        out << "valid\n";
        return kOk;
      }
      out << "invalid\n";
      for (const auto& d : v.diagnostics) out << "  " << d << "\n";
      return kError;
    }
    if (*red) {
      const auto inst = load_instance(input);
      const auto col = require_coloring(inst, input);
      const auto spec = reduced::partition_from_json(json::parse(read_file(partition), nullptr, false));
      auto doc = reduced::to_json(reduced::build_reduced(spec, col.subgraph(Color::Red)));
      doc["kind"] = "reduced";
      sink.write(doc);
      return kOk;
    }
    if (*sweep) {
      model.validate();
      const auto sizes = model.model == "planted" || model.model == "file" ? std::vector<std::size_t>{0}
                                                                           : parse_sizes(ns, "--n");
      std::vector<double> gs;
      for (const auto& g : split(gammas, ',')) gs.push_back(parse_real(g, "--gamma"));
      if (gs.empty()) throw UsageError("--gamma is empty");
      const auto [lo, hi] = parse_range(seeds, "--seeds");

      struct Job {
        std::size_t n;
        double gamma;
        std::uint64_t seed;
      };
      std::vector<Job> jobs;
      for (auto size : sizes)
        for (auto g : gs)
          for (auto s = lo; s <= hi; ++s) jobs.push_back({size, g, s});
      std::vector<RunRecord> records(jobs.size());
      parallel_for(jobs.size(), [&](std::size_t i) {
        records[i] = run_one(model.make(jobs[i].n, jobs[i].seed), jobs[i].gamma, jobs[i].seed);
      });

      if (format.empty() || format == "csv") sink.write(sweep_csv(records, timing));
      else if (format == "json") sink.write(sweep_json(records, timing));
      else throw UsageError("sweep --format is csv or json");
      const bool all_valid = std::all_of(records.begin(), records.end(), [](const RunRecord& r) { return r.valid; });
      return all_valid ? kOk : kError;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const InstanceTooLarge& e) {
    err << "instance too large: " << e.what() << "\n";
  } catch (const UndefinedDensity& e) {
    err << "undefined density: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kError;
}

}  // namespace rcover::cli
