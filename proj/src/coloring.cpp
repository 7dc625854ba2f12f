#include "rcover/coloring.hpp"

#include "rcover/errors.hpp"

namespace rcover {

Coloring::Coloring(Hypergraph3 host, std::span<const Color> colors) : host_(std::move(host)) {
  if (colors.size() != host_.edge_count())
    throw PreconditionError("coloring has " + std::to_string(colors.size()) + " entries for " +
                            std::to_string(host_.edge_count()) + " edges");
  red_.assign((colors.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] == Color::Red) red_[i >> 6] |= std::uint64_t{1} << (i & 63);
}

Coloring Coloring::monochromatic(Hypergraph3 host, Color color) {
  std::vector<Color> colors(host.edge_count(), color);
  return Coloring(std::move(host), colors);
}

Coloring Coloring::from_function(Hypergraph3 host, const std::function<Color(const Triple&)>& pick) {
  std::vector<Color> colors;
  colors.reserve(host.edge_count());
  for (const auto& t : host.edges()) colors.push_back(pick(t));
  return Coloring(std::move(host), colors);
}

Color Coloring::color(const Triple& t) const {
  const auto pos = host_.position(t);
  if (!pos) throw NotAnEdge(to_string(t) + " is not an edge of the colored host");
  return color_at(*pos);
}

bool Coloring::has_color(const Triple& t, Color c) const {
  const auto pos = host_.position(t);
  return pos && color_at(*pos) == c;
}

std::vector<Color> Coloring::aligned() const {
  std::vector<Color> out;
  out.reserve(host_.edge_count());
  for (std::size_t i = 0; i < host_.edge_count(); ++i) out.push_back(color_at(i));
  return out;
}

std::size_t Coloring::count(Color c) const {
  std::size_t red = 0;
  for (auto w : red_) red += static_cast<std::size_t>(std::popcount(w));
  return c == Color::Red ? red : host_.edge_count() - red;
}

Hypergraph3 Coloring::subgraph(Color c) const {
  std::vector<Triple> kept;
  for (std::size_t i = 0; i < host_.edge_count(); ++i)
    if (color_at(i) == c) kept.push_back(host_.edges()[i]);
  return host_.with_edges(std::move(kept));
}

Coloring Coloring::restricted_to(const Hypergraph3& sub) const {
  std::vector<Color> colors;
  colors.reserve(sub.edge_count());
  for (const auto& t : sub.edges()) colors.push_back(color(t));
  return Coloring(sub, colors);
}

}  // namespace rcover
