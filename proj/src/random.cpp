#include "rcover/random.hpp"

#include <numeric>

namespace rcover {

namespace {
constexpr std::uint64_t kColorStream = 0xC010'0000'0000'0001ull;
}

Coloring uniform_coloring(std::size_t n, double p, std::uint64_t seed) {
  auto host = Hypergraph3::complete(n);
  std::vector<Color> colors;
  colors.reserve(host.edge_count());
  // complete() lists triples in colex order, so position == colex index
  for (std::size_t i = 0; i < host.edge_count(); ++i)
    colors.push_back(SplitMix64::unit(seed, i) < p ? Color::Red : Color::Blue);
  return Coloring(std::move(host), colors);
}

Coloring planted_partition_coloring(const std::vector<std::size_t>& sizes) {
  const auto n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> cls;
  cls.reserve(n);
  for (std::size_t i = 0; i < sizes.size(); ++i) cls.insert(cls.end(), sizes[i], i);
  return Coloring::from_function(Hypergraph3::complete(n), [&](const Triple& t) {
    return cls[t.a] == cls[t.b] && cls[t.b] == cls[t.c] ? Color::Red : Color::Blue;
  });
}

Coloring monochromatic_coloring(std::size_t n, Color color) {
  return Coloring::monochromatic(Hypergraph3::complete(n), color);
}

Hypergraph3 random_hypergraph(std::size_t n, double density, std::uint64_t seed) {
  std::vector<Triple> edges;
  const auto total = binomial(n, 3);
  for (std::uint64_t i = 0; i < total; ++i)
    if (SplitMix64::unit(seed, i) < density) edges.push_back(colex_inverse(i));
  return Hypergraph3(n, std::move(edges));
}

Coloring random_colored(std::size_t n, double density, double p, std::uint64_t seed) {
  auto host = random_hypergraph(n, density, seed);
  std::vector<Color> colors;
  colors.reserve(host.edge_count());
  for (const auto& t : host.edges())
    colors.push_back(SplitMix64::unit(seed ^ kColorStream, colex_index(t)) < p ? Color::Red : Color::Blue);
  return Coloring(std::move(host), colors);
}

}  // namespace rcover
