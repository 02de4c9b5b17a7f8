#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "approxsym/errors.hpp"
#include "approxsym/graph.hpp"

namespace approxsym {

enum class CentralityKind { degree, eigenvector, pagerank, clustering, betweenness };

inline constexpr std::string_view to_string(CentralityKind kind) {
  switch (kind) {
    case CentralityKind::degree: return "degree";
    case CentralityKind::eigenvector: return "eigenvector";
    case CentralityKind::pagerank: return "pagerank";
    case CentralityKind::clustering: return "clustering";
    case CentralityKind::betweenness: return "betweenness";
  }
  return "unknown";
}

inline CentralityKind parse_centrality_kind(std::string_view name) {
  for (auto kind : {CentralityKind::degree, CentralityKind::eigenvector, CentralityKind::pagerank,
                    CentralityKind::clustering, CentralityKind::betweenness}) {
    if (name == to_string(kind)) return kind;
  }
  throw ConfigError("unknown centrality '" + std::string(name) + "'");
}

struct CentralityVector {
  CentralityKind kind = CentralityKind::degree;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t i) const noexcept { return values[i]; }
};

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kDefaultMaxIterations = 1000;

inline CentralityVector degree_centrality(const Graph& g) {
  CentralityVector c{CentralityKind::degree, std::vector<double>(g.size())};
  for (Vertex v = 0; v < g.size(); ++v) c.values[v] = static_cast<double>(g.degree(v));
  return c;
}

/// Dominant eigenvector of the adjacency matrix, unit L2 norm, non-negative.
///
/// Iterates x <- (A + I) x instead of A x. The shift leaves eigenvectors
/// unchanged but makes the top eigenvalue strictly dominant in modulus on
/// bipartite graphs (paths, stars, grids, trees), where plain A x oscillates.
inline CentralityVector eigenvector_centrality(const Graph& g, double tol = kDefaultTolerance,
                                               std::size_t max_iter = kDefaultMaxIterations) {
  const std::size_t n = g.size();
  if (g.edge_count() == 0) throw std::invalid_argument("eigenvector centrality needs an edge");
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    double norm2 = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      double s = x[v];
      for (Vertex u : g.neighbors(v)) s += x[u];
      next[v] = s;
      norm2 += s * s;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] *= inv;
      change = std::max(change, std::abs(next[v] - x[v]));
    }
    x.swap(next);
    if (change < tol) return {CentralityKind::eigenvector, std::move(x)};
  }
  throw ConvergenceError("eigenvector centrality", max_iter);
}

/// PageRank with uniform teleport; dangling vertices spread their mass uniformly.
inline CentralityVector pagerank(const Graph& g, double alpha = 0.85, double tol = kDefaultTolerance,
                                 std::size_t max_iter = kDefaultMaxIterations) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("pagerank damping must be in (0,1)");
  const std::size_t n = g.size();
  if (n == 0) return {CentralityKind::pagerank, {}};
  const double dn = static_cast<double>(n);
  std::vector<double> x(n, 1.0 / dn);
  std::vector<double> next(n);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    double dangling = 0.0;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 0) dangling += x[v];
    const double base = (1.0 - alpha) / dn + alpha * dangling / dn;
    double total = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      double s = 0.0;
      for (Vertex u : g.neighbors(v)) s += x[u] / static_cast<double>(g.degree(u));
      next[v] = base + alpha * s;
      total += next[v];
    }
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      next[v] /= total;  // keeps the sum at 1 against rounding drift
      change += std::abs(next[v] - x[v]);
    }
    x.swap(next);
    if (change < tol) return {CentralityKind::pagerank, std::move(x)};
  }
  throw ConvergenceError("pagerank", max_iter);
}

/// Local clustering coefficient 2 |E(N_i)| / (k_i (k_i - 1)), counting edges
/// with both endpoints in N_i. Vertices of degree < 2 get 0.
inline CentralityVector clustering_coefficient(const Graph& g) {
  CentralityVector c{CentralityKind::clustering, std::vector<double>(g.size(), 0.0)};
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto nb = g.neighbors(v);
    const std::size_t k = nb.size();
    if (k < 2) continue;
    std::size_t links = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) links += g.has_edge(nb[i], nb[j]);
    c.values[v] = 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
  }
  return c;
}

/// Exact betweenness over unordered pairs, endpoints excluded. One BFS plus
/// dependency accumulation per source; sources are processed in index order.
inline CentralityVector betweenness_centrality(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<double> bc(n, 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<Vertex> order;
  order.reserve(n);

  for (Vertex s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const Vertex v = order[head];
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
      const Vertex w = order[i];
      for (Vertex v : g.neighbors(w))
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      bc[w] += delta[w];
    }
  }
  for (double& b : bc) b *= 0.5;
  return {CentralityKind::betweenness, std::move(bc)};
}

inline CentralityVector compute_centrality(const Graph& g, CentralityKind kind) {
  switch (kind) {
    case CentralityKind::degree: return degree_centrality(g);
    case CentralityKind::eigenvector: return eigenvector_centrality(g);
    case CentralityKind::pagerank: return pagerank(g);
    case CentralityKind::clustering: return clustering_coefficient(g);
    case CentralityKind::betweenness: return betweenness_centrality(g);
  }
  throw std::invalid_argument("unknown centrality kind");
}

}  // namespace approxsym
