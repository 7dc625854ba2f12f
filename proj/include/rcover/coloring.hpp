#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "rcover/hypergraph.hpp"

namespace rcover {

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_code(Color c) { return c == Color::Red ? 'R' : 'B'; }
constexpr std::string_view color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

// Red/blue assignment defined on exactly the edges of its host.
class Coloring {
 public:
  Coloring() = default;
  // colors[i] is the color of host.edges()[i].
  Coloring(Hypergraph3 host, std::span<const Color> colors);

  static Coloring monochromatic(Hypergraph3 host, Color color);
  static Coloring from_function(Hypergraph3 host, const std::function<Color(const Triple&)>& pick);

  const Hypergraph3& host() const noexcept { return host_; }

  // Throws NotAnEdge for triples outside the host.
  Color color(const Triple& t) const;
  // False for non-edges.
  bool has_color(const Triple& t, Color c) const;
  Color color_at(std::size_t position) const {
    return ((red_[position >> 6] >> (position & 63)) & 1u) != 0 ? Color::Red : Color::Blue;
  }

  std::vector<Color> aligned() const;
  std::size_t count(Color c) const;

  // H_red or H_blue on the host's vertex set.
  Hypergraph3 subgraph(Color c) const;
  // Coloring of a sub-hypergraph of the host.
  Coloring restricted_to(const Hypergraph3& sub) const;

 private:
  Hypergraph3 host_;
  std::vector<std::uint64_t> red_;  // bit per edge position
};

}  // namespace rcover
