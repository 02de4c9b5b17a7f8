#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "approxsym/graph.hpp"
#include "approxsym/permutation.hpp"

namespace approxsym {

/// Mismatch count epsilon(A, P) = 1/4 * ||A - P A P^T||_1 for an n-vertex graph.
///
/// Each edge mapped onto a non-edge is matched by exactly one non-edge mapped
/// onto an edge, so the quarter-norm equals the number of edges whose image is
/// not an edge. Always an exact integer.
struct Energy {
  std::int64_t epsilon = 0;
  std::size_t n = 0;
  friend bool operator==(const Energy&, const Energy&) = default;
};

namespace detail {
inline void check_dims(const Graph& g, const Permutation& p) {
  if (g.size() != p.size()) {
    throw std::invalid_argument("permutation size " + std::to_string(p.size()) +
                                " does not match graph size " + std::to_string(g.size()));
  }
}
}  // namespace detail

inline Energy energy(const Graph& g, const Permutation& p) {
  detail::check_dims(g, p);
  std::int64_t broken = 0;
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && !g.has_edge(p(u), p(v))) ++broken;
  return {broken, g.size()};
}

/// Literal dense evaluation: materializes A, P and P A P^T and sums the
/// absolute entry differences. Test reference only.
inline Energy energy_dense_oracle(const Graph& g, const Permutation& p) {
  constexpr std::size_t kLimit = 2048;
  detail::check_dims(g, p);
  const std::size_t n = g.size();
  if (n > kLimit) throw std::invalid_argument("dense oracle limited to n <= 2048");

  using Matrix = std::vector<std::int64_t>;
  auto at = [n](Matrix& m, std::size_t i, std::size_t j) -> std::int64_t& { return m[i * n + j]; };

  Matrix a(n * n, 0);
  for (const Edge& e : g.edges()) {
    at(a, e.u, e.v) = 1;
    at(a, e.v, e.u) = 1;
  }
  // P_ij = 1 iff i = pi(j)
  Matrix perm(n * n, 0);
  for (std::size_t j = 0; j < n; ++j) at(perm, p(static_cast<Vertex>(j)), j) = 1;

  // Every row of P holds a single 1, so (P X)_ij = X_kj with P_ik = 1 and
  // (X P^T)_ij = X_ik with P_jk = 1.
  auto row_one = [&](std::size_t i) {
    for (std::size_t k = 0; k < n; ++k)
      if (at(perm, i, k) != 0) return k;
    throw std::logic_error("permutation matrix row without a one");
  };
  std::vector<std::size_t> one(n);
  for (std::size_t i = 0; i < n; ++i) one[i] = row_one(i);

  Matrix pa(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(pa, i, j) = at(a, one[i], j);
  Matrix papt(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) at(papt, i, j) = at(pa, i, one[j]);

  std::int64_t l1 = 0;
  for (std::size_t k = 0; k < n * n; ++k) l1 += a[k] > papt[k] ? a[k] - papt[k] : papt[k] - a[k];
  if (l1 % 4 != 0) throw std::logic_error("dense mismatch norm not divisible by 4");
  return {l1 / 4, n};
}

/// epsilon(p with images of a and b swapped) - epsilon(p).
///
/// With x = pi(a), y = pi(b), only pairs {a,j} and {b,j} change, and the
/// change in the quarter-norm collapses to
///   sum over j != a,b of (A_aj - A_bj) * (A_{x,pi(j)} - A_{y,pi(j)}),
/// whose terms vanish unless j is adjacent to exactly one of a, b. Cost is
/// O(deg(a) + deg(b)) membership tests.
inline std::int64_t energy_delta(const Graph& g, const Permutation& p, Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("energy_delta requires distinct vertices");
  const Vertex x = p(a);
  const Vertex y = p(b);
  std::int64_t delta = 0;
  for (Vertex j : g.neighbors(a)) {
    if (j == b || g.has_edge(b, j)) continue;
    const Vertex pj = p(j);
    delta += static_cast<int>(g.has_edge(x, pj)) - static_cast<int>(g.has_edge(y, pj));
  }
  for (Vertex j : g.neighbors(b)) {
    if (j == a || g.has_edge(a, j)) continue;
    const Vertex pj = p(j);
    delta -= static_cast<int>(g.has_edge(x, pj)) - static_cast<int>(g.has_edge(y, pj));
  }
  return delta;
}

/// S = ||A - P A P^T||_1 / (n (n - 1)) = 4 epsilon / (n (n - 1)).
inline double normalized_symmetry(Energy e) {
  if (e.n < 2) throw std::invalid_argument("normalized symmetry needs n >= 2");
  return 4.0 * static_cast<double>(e.epsilon) /
         (static_cast<double>(e.n) * static_cast<double>(e.n - 1));
}

}  // namespace approxsym
