#include "rcover/triple.hpp"

#include <algorithm>

#include "rcover/errors.hpp"

namespace rcover {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

VertexPair VertexPair::of(Vertex x, Vertex y) {
  if (x == y) throw InvalidPair("pair needs two distinct vertices, got " + std::to_string(x) + " twice");
  return x < y ? VertexPair{x, y} : VertexPair{y, x};
}

Triple Triple::of(Vertex x, Vertex y, Vertex z) {
  std::array<Vertex, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == v[1] || v[1] == v[2])
    throw PreconditionError("triple has a repeated vertex");
  return {v[0], v[1], v[2]};
}

Vertex Triple::opposite(VertexPair p) const {
  if (a != p.lo && a != p.hi) return a;
  if (b != p.lo && b != p.hi) return b;
  return c;
}

std::uint64_t colex_index(const Triple& t) {
  return binomial(t.c, 3) + binomial(t.b, 2) + t.a;
}

Triple colex_inverse(std::uint64_t index) {
  auto largest = [](std::uint64_t rest, std::uint64_t k) {
    // largest x with C(x, k) <= rest
    std::uint64_t x = k - 1;
    while (binomial(x + 1, k) <= rest) ++x;
    return x;
  };
  const auto c = largest(index, 3);
  index -= binomial(c, 3);
  const auto b = largest(index, 2);
  index -= binomial(b, 2);
  return {static_cast<Vertex>(index), static_cast<Vertex>(b), static_cast<Vertex>(c)};
}

std::size_t intersection_size(const Triple& e, const Triple& f) {
  return static_cast<std::size_t>(f.contains(e.a)) + f.contains(e.b) + f.contains(e.c);
}

std::string to_string(const Triple& t) {
  return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
}

}  // namespace rcover
