#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "cthh/quiver.hpp"

namespace cthh::test {

inline Quiver linear(int n) {
  std::vector<Arrow> a;
  for (int i = 1; i < n; ++i) a.push_back({i, i + 1});
  return Quiver(n, a);
}

inline Quiver oriented_cycle(int n) {
  std::vector<Arrow> a;
  for (int i = 1; i <= n; ++i) a.push_back({i, i % n + 1});
  return Quiver(n, a);
}

// Triangles 1>2>3>1 and 1>2>4>1 sharing a: 1->2.
inline Quiver two_triangles() { return Quiver(4, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 1}}); }

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace cthh::test
