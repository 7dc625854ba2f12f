#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rcover/coloring.hpp"

namespace rcover {

// A host hypergraph and, when the file carried one, its coloring.
struct Instance {
  Hypergraph3 host;
  std::optional<Coloring> coloring;
};

// h3json: {"n": int, "edges": [[a,b,c], ...] ascending triples,
//          "colors": ["R"|"B", ...] optional, aligned with edges}.
// Writers emit edges in colex order.
nlohmann::json to_h3json(const Hypergraph3& h);
nlohmann::json to_h3json(const Coloring& col);
Instance from_h3json(const nlohmann::json& doc);

// h3bits: ASCII header "H3BITS <n>\n" followed by ceil(C(n,3)/8) bytes.
// Bit i (colex index) lives in byte i/8 at bit position i%8 (LSB first);
// 1 means red. Padding bits are zero. Only complete colorings qualify.
std::string to_h3bits(const Coloring& col);
Coloring from_h3bits(std::string_view bytes);

// Autodetects the format from the leading bytes.
Instance parse_instance(std::string_view bytes);
Instance load_instance(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

nlohmann::json triple_json(const Triple& t);
Triple triple_from_json(const nlohmann::json& j);

}  // namespace rcover
