#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rcover/coloring.hpp"

namespace rcover {

// Counter-based SplitMix64. The i-th draw of stream `seed` is
//   mix(seed + (i + 1) * 0x9E3779B97F4A7C15)
// with the standard SplitMix64 finalizer, so any draw can be recomputed in
// isolation and in any language.
struct SplitMix64 {
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  static constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    return mix(seed + (counter + 1) * kGolden);
  }
  // Uniform double in [0, 1) from the top 53 bits.
  static constexpr double unit(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(at(seed, counter) >> 11) * 0x1.0p-53;
  }

  // Sequential view, usable as a UniformRandomBitGenerator.
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return at(seed_, counter_++); }
  double uniform() { return unit(seed_, counter_++); }
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return (*this)() % bound; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Complete K_n^(3); triple with colex index i is red iff unit(seed, i) < p.
Coloring uniform_coloring(std::size_t n, double p, std::uint64_t seed);

// Complete coloring with consecutive vertex classes of the given sizes:
// triples inside one class are red, all others blue.
Coloring planted_partition_coloring(const std::vector<std::size_t>& sizes);

Coloring monochromatic_coloring(std::size_t n, Color color);

// Each triple of [0,n) present independently with probability `density`.
Hypergraph3 random_hypergraph(std::size_t n, double density, std::uint64_t seed);

// Random host from random_hypergraph, colored red with probability p using
// an independent stream.
Coloring random_colored(std::size_t n, double density, double p, std::uint64_t seed);

}  // namespace rcover
