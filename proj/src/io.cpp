#include "rcover/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rcover/errors.hpp"

namespace rcover {

namespace {
constexpr std::string_view kBitsMagic = "H3BITS ";
}

nlohmann::json triple_json(const Triple& t) { return nlohmann::json::array({t.a, t.b, t.c}); }

Triple triple_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("edge must be a 3-element array");
  std::array<Vertex, 3> v{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!j[i].is_number_unsigned()) throw ParseError("edge entries must be nonnegative integers");
    v[i] = j[i].get<Vertex>();
  }
  if (!(v[0] < v[1] && v[1] < v[2])) throw ParseError("edge entries must be strictly ascending");
  return {v[0], v[1], v[2]};
}

nlohmann::json to_h3json(const Hypergraph3& h) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& t : h.edges()) edges.push_back(triple_json(t));
  return {{"n", h.universe()}, {"edges", std::move(edges)}};
}

nlohmann::json to_h3json(const Coloring& col) {
  auto doc = to_h3json(col.host());
  nlohmann::json colors = nlohmann::json::array();
  for (auto c : col.aligned()) colors.push_back(std::string(1, color_code(c)));
  doc["colors"] = std::move(colors);
  return doc;
}

Instance from_h3json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw ParseError("h3json needs fields n and edges");
  if (!doc["n"].is_number_unsigned()) throw ParseError("n must be a nonnegative integer");
  const auto n = doc["n"].get<std::size_t>();
  const auto& raw_edges = doc["edges"];
  if (!raw_edges.is_array()) throw ParseError("edges must be an array");

  std::vector<Triple> edges;
  edges.reserve(raw_edges.size());
  for (const auto& e : raw_edges) {
    auto t = triple_from_json(e);
    if (t.c >= n) throw ParseError("edge " + to_string(t) + " has a vertex >= n");
    edges.push_back(t);
  }

  std::optional<std::vector<Color>> colors;
  if (doc.contains("colors")) {
    const auto& raw = doc["colors"];
    if (!raw.is_array() || raw.size() != edges.size())
      throw ParseError("colors must be an array aligned with edges");
    colors.emplace();
    for (const auto& c : raw) {
      if (c == "R") colors->push_back(Color::Red);
      else if (c == "B") colors->push_back(Color::Blue);
      else throw ParseError("colors entries must be \"R\" or \"B\"");
    }
  }

  // Reorder into colex order while keeping colors aligned.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return edges[x] < edges[y]; });
  std::vector<Triple> sorted;
  std::vector<Color> sorted_colors;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k > 0 && edges[order[k]] == edges[order[k - 1]])
      throw ParseError("duplicate edge " + to_string(edges[order[k]]));
    sorted.push_back(edges[order[k]]);
    if (colors) sorted_colors.push_back((*colors)[order[k]]);
  }

  Instance inst{Hypergraph3(n, std::move(sorted)), std::nullopt};
  if (colors) inst.coloring = Coloring(inst.host, sorted_colors);
  return inst;
}

std::string to_h3bits(const Coloring& col) {
  const auto& h = col.host();
  const auto n = h.universe();
  const auto total = binomial(n, 3);
  if (h.edge_count() != total || h.vertex_count() != n)
    throw PreconditionError("h3bits needs a coloring of the complete hypergraph");
  std::string out = std::string(kBitsMagic) + std::to_string(n) + "\n";
  std::string payload((total + 7) / 8, '\0');
  // position == colex index on a complete host
  for (std::size_t i = 0; i < total; ++i)
    if (col.color_at(i) == Color::Red) payload[i >> 3] = static_cast<char>(payload[i >> 3] | (1 << (i & 7)));
  return out + payload;
}

Coloring from_h3bits(std::string_view bytes) {
  if (!bytes.starts_with(kBitsMagic)) throw ParseError("missing H3BITS header");
  const auto eol = bytes.find('\n');
  if (eol == std::string_view::npos) throw ParseError("unterminated H3BITS header");
  const auto digits = bytes.substr(kBitsMagic.size(), eol - kBitsMagic.size());
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("bad vertex count in H3BITS header");
  const auto total = binomial(n, 3);
  const auto payload = bytes.substr(eol + 1);
  if (payload.size() != (total + 7) / 8)
    throw ParseError("H3BITS payload has " + std::to_string(payload.size()) + " bytes, expected " +
                     std::to_string((total + 7) / 8));
  std::vector<Color> colors(total);
  for (std::size_t i = 0; i < total; ++i)
    colors[i] = ((static_cast<unsigned char>(payload[i >> 3]) >> (i & 7)) & 1u) ? Color::Red : Color::Blue;
  for (std::size_t i = total; i < payload.size() * 8; ++i)
    if ((static_cast<unsigned char>(payload[i >> 3]) >> (i & 7)) & 1u)
      throw ParseError("nonzero padding bits in H3BITS payload");
  return Coloring(Hypergraph3::complete(n), colors);
}

Instance parse_instance(std::string_view bytes) {
  if (bytes.starts_with(kBitsMagic)) {
    auto col = from_h3bits(bytes);
    auto host = col.host();
    return {std::move(host), std::move(col)};
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_h3json(doc);
}

Instance load_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace rcover
