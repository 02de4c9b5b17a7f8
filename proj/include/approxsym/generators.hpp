#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "approxsym/errors.hpp"
#include "approxsym/graph.hpp"
#include "approxsym/rng.hpp"

namespace approxsym {

/// Cartesian product of paths P_{l_1} x ... x P_{l_d}. Vertex index is the
/// mixed-radix number with the first coordinate most significant.
inline Graph grid_graph(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw std::invalid_argument("grid needs at least one dimension");
  std::size_t n = 1;
  for (std::size_t len : lengths) {
    if (len < 1) throw std::invalid_argument("grid side lengths must be >= 1");
    if (n > std::numeric_limits<Vertex>::max() / len) throw std::overflow_error("grid too large");
    n *= len;
  }
  const std::size_t d = lengths.size();
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t i = d - 1; i-- > 0;) stride[i] = stride[i + 1] * lengths[i + 1];

  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t coord = (v / stride[i]) % lengths[i];
      if (coord + 1 < lengths[i])
        edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + stride[i])});
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph grid_graph(std::initializer_list<std::size_t> lengths) {
  return grid_graph(std::span<const std::size_t>(lengths.begin(), lengths.size()));
}

/// G(n, p): every pair independently with probability p.
inline Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// Preferential attachment grown from the path P_{m0}. Each arriving vertex
/// links to k distinct existing vertices drawn with probability proportional
/// to degree (duplicates are redrawn). While all existing degrees are zero
/// (m0 = 1) the draw is uniform.
inline Graph barabasi_albert(std::size_t n, std::size_t k, std::size_t m0, Rng& rng) {
  if (!(k >= 1 && k <= m0 && m0 < n)) throw std::invalid_argument("barabasi_albert needs 1 <= k <= m0 < n");
  std::vector<Edge> edges;
  std::vector<Vertex> endpoints;  // vertex v appears deg(v) times
  for (Vertex v = 1; v < m0; ++v) {
    edges.push_back({v - 1, v});
    endpoints.push_back(v - 1);
    endpoints.push_back(v);
  }
  std::vector<Vertex> targets;
  std::vector<bool> chosen(n, false);
  for (auto v = static_cast<Vertex>(m0); v < n; ++v) {
    targets.clear();
    while (targets.size() < k) {
      const Vertex t = endpoints.empty() ? static_cast<Vertex>(rng.below(v))
                                         : endpoints[rng.below(endpoints.size())];
      if (chosen[t]) continue;
      chosen[t] = true;
      targets.push_back(t);
    }
    for (Vertex t : targets) {
      chosen[t] = false;
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

/// Duplication-divergence grown from K_2: a uniformly chosen vertex is copied,
/// the copy keeps each of the original's links with probability sigma and is
/// never linked to the original. Copies with no surviving link are discarded.
inline Graph duplication_divergence(std::size_t n, double sigma, Rng& rng,
                                    std::size_t max_consecutive_failures = 1'000'000) {
  if (!(sigma > 0.0 && sigma <= 1.0)) throw std::invalid_argument("divergence probability must be in (0,1]");
  if (n < 2) throw std::invalid_argument("duplication_divergence needs n >= 2");
  std::vector<std::vector<Vertex>> adj(2);
  adj[0].push_back(1);
  adj[1].push_back(0);
  std::vector<Vertex> kept;
  std::size_t failures = 0;
  while (adj.size() < n) {
    const auto original = static_cast<Vertex>(rng.below(adj.size()));
    kept.clear();
    for (Vertex u : adj[original])
      if (rng.bernoulli(sigma)) kept.push_back(u);
    if (kept.empty()) {
      if (++failures >= max_consecutive_failures)
        throw GenerationError("duplication_divergence: too many discarded duplicates");
      continue;
    }
    failures = 0;
    const auto w = static_cast<Vertex>(adj.size());
    adj.emplace_back(kept);
    for (Vertex u : kept) adj[u].push_back(w);
  }
  // from_adjacency symmetrizes, so hand it one direction only
  std::vector<std::vector<Vertex>> upper(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) upper[u].push_back(v);
  return Graph::from_adjacency(std::move(upper));
}

enum class ModelFamily { grid, er, ba, dd };

inline constexpr std::string_view to_string(ModelFamily f) {
  switch (f) {
    case ModelFamily::grid: return "grid";
    case ModelFamily::er: return "er";
    case ModelFamily::ba: return "ba";
    case ModelFamily::dd: return "dd";
  }
  return "unknown";
}

inline ModelFamily parse_model_family(std::string_view name) {
  for (auto f : {ModelFamily::grid, ModelFamily::er, ModelFamily::ba, ModelFamily::dd})
    if (name == to_string(f)) return f;
  throw ConfigError("unknown model family '" + std::string(name) + "'");
}

/// One random-graph model with its parameters. Only the fields of `family` are used.
struct ModelSpec {
  ModelFamily family = ModelFamily::er;
  std::vector<std::size_t> lengths;  // grid
  std::size_t n = 0;                 // er, ba, dd
  double p = 0.0;                    // er
  std::size_t k = 0;                 // ba
  std::size_t m0 = 0;                // ba; 0 means m0 = k
  double sigma = 0.0;                // dd

  std::size_t vertex_count() const {
    if (family != ModelFamily::grid) return n;
    std::size_t total = 1;
    for (std::size_t len : lengths) total *= len;
    return total;
  }

  std::size_t seed_size() const { return m0 == 0 ? k : m0; }

  void validate() const {
    switch (family) {
      case ModelFamily::grid:
        if (lengths.empty()) throw ConfigError("grid model needs side lengths");
        for (std::size_t len : lengths)
          if (len < 1) throw ConfigError("grid side lengths must be >= 1");
        break;
      case ModelFamily::er:
        if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("er model needs 0 <= p <= 1");
        break;
      case ModelFamily::ba:
        if (!(k >= 1 && k <= seed_size() && seed_size() < n))
          throw ConfigError("ba model needs 1 <= k <= m0 < n");
        break;
      case ModelFamily::dd:
        if (!(sigma > 0.0 && sigma <= 1.0)) throw ConfigError("dd model needs 0 < sigma <= 1");
        if (n < 2) throw ConfigError("dd model needs n >= 2");
        break;
    }
  }

  /// Compact parameter text, e.g. "n=150 k=5 m0=5" or "lengths=5x20".
  std::string params() const {
    std::ostringstream os;
    switch (family) {
      case ModelFamily::grid:
        os << "lengths=";
        for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "x" : "") << lengths[i];
        break;
      case ModelFamily::er: os << "n=" << n << " p=" << p; break;
      case ModelFamily::ba: os << "n=" << n << " k=" << k << " m0=" << seed_size(); break;
      case ModelFamily::dd: os << "n=" << n << " sigma=" << sigma; break;
    }
    return os.str();
  }
};

inline Graph generate(const ModelSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);
  switch (spec.family) {
    case ModelFamily::grid: return grid_graph(spec.lengths);
    case ModelFamily::er: return erdos_renyi(spec.n, spec.p, rng);
    case ModelFamily::ba: return barabasi_albert(spec.n, spec.k, spec.seed_size(), rng);
    case ModelFamily::dd: return duplication_divergence(spec.n, spec.sigma, rng);
  }
  throw std::invalid_argument("unknown model family");
}

/// Side lengths 5 x (n/5) for 2D grids and 2 x 5 x (n/10) for 3D grids.
inline std::vector<std::size_t> grid_lengths_for(std::size_t n, std::size_t dimensions) {
  if (dimensions == 2 && n % 5 == 0 && n >= 5) return {5, n / 5};
  if (dimensions == 3 && n % 10 == 0 && n >= 10) return {2, 5, n / 10};
  throw ConfigError("grid of " + std::to_string(n) + " vertices has no " + std::to_string(dimensions) +
                    "D 5-wide layout");
}

}  // namespace approxsym
