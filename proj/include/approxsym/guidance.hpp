#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "approxsym/centrality.hpp"
#include "approxsym/permutation.hpp"
#include "approxsym/rng.hpp"

namespace approxsym {

using VertexPair = std::pair<Vertex, Vertex>;

struct GuidanceParams {
  CentralityKind centrality = CentralityKind::eigenvector;
  double beta = 0.05;  // division constant
  double phi = 0.05;   // probability constant

  void validate() const {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw ConfigError("beta must be > 0");
    if (!(phi > 0.0) || !std::isfinite(phi)) throw ConfigError("phi must be > 0");
  }
};

/// Pairwise centrality similarity m_ij = 1 / (|c_i - c_j| + beta), where c is
/// the centrality min-max rescaled to [0, 1]. Dense, symmetric, row-major.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t n, double beta, std::vector<double> data)
      : n_(n), beta_(beta), data_(std::move(data)) {}

  std::size_t size() const noexcept { return n_; }
  double beta() const noexcept { return beta_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

 private:
  std::size_t n_ = 0;
  double beta_ = 1.0;
  std::vector<double> data_;
};

/// Min-max rescaling to [0,1]; constant vectors map to zeros.
inline std::vector<double> rescale_unit(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  if (out.empty()) return out;
  for (double v : out)
    if (!std::isfinite(v)) throw std::invalid_argument("centrality values must be finite");
  const auto [lo, hi] = std::minmax_element(out.begin(), out.end());
  const double low = *lo;
  const double range = *hi - *lo;
  for (double& v : out) v = range > 0.0 ? (v - low) / range : 0.0;
  return out;
}

inline SimilarityMatrix build_similarity(const CentralityVector& c, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("beta must be > 0");
  const std::size_t n = c.size();
  const std::vector<double> scaled = rescale_unit(c.values);
  std::vector<double> data(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double m = 1.0 / (std::abs(scaled[i] - scaled[j]) + beta);
      data[i * n + j] = m;
      data[j * n + i] = m;
    }
  }
  return {n, beta, std::move(data)};
}

/// Unnormalized proposal weights for the second vertex given the first:
/// w_b = max(m[a][pi(b)] + m[b][pi(a)] - m[a][pi(a)] - m[b][pi(b)], phi), w_a = 0.
inline std::vector<double> guided_weights(const Permutation& p, const SimilarityMatrix& sim,
                                          double phi, Vertex a) {
  const std::size_t n = p.size();
  std::vector<double> w(n, 0.0);
  const Vertex pa = p(a);
  const double self_a = sim(a, pa);
  for (Vertex b = 0; b < n; ++b) {
    if (b == a) continue;
    const double gain = sim(a, p(b)) + sim(b, pa) - self_a - sim(b, p(b));
    w[b] = std::max(gain, phi);
  }
  return w;
}

/// Draws an index with probability weights[i] / sum(weights) by inverting the
/// running sum. All weights must be >= 0 with a positive total.
inline std::size_t sample_categorical(std::span<const double> weights, double total, Rng& rng) {
  const double target = rng.uniform01() * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = i;
    if (target < acc) return i;
  }
  return last_positive;  // rounding left target at the very top
}

/// First vertex uniform, partner drawn in proportion to guided_weights().
inline VertexPair guided_move(const Permutation& p, const SimilarityMatrix& sim, double phi, Rng& rng) {
  const std::size_t n = p.size();
  if (n < 2) throw std::invalid_argument("guided move needs n >= 2");
  if (!(phi > 0.0)) throw std::invalid_argument("phi must be > 0");
  if (sim.size() != n) throw std::invalid_argument("similarity matrix size mismatch");
  const auto a = static_cast<Vertex>(rng.below(n));
  const std::vector<double> w = guided_weights(p, sim, phi, a);
  double total = 0.0;
  for (double x : w) total += x;
  return {a, static_cast<Vertex>(sample_categorical(w, total, rng))};
}

/// Uniform over unordered pairs of distinct vertices.
inline VertexPair uniform_move(std::size_t n, Rng& rng) {
  if (n < 2) throw std::invalid_argument("uniform move needs n >= 2");
  const auto a = static_cast<Vertex>(rng.below(n));
  auto b = static_cast<Vertex>(rng.below(n - 1));
  if (b >= a) ++b;
  return {a, b};
}

inline VertexPair uniform_move(const Permutation& p, Rng& rng) { return uniform_move(p.size(), rng); }

/// Stateful guided proposer used inside the annealing loop. Caches
/// m[b][pi(b)] for the current state so that a proposal costs one pass over a
/// matrix row plus the categorical draw. Call on_swap() after every accepted move.
class GuidedProposer {
 public:
  GuidedProposer(const SimilarityMatrix& sim, double phi) : sim_(&sim), phi_(phi) {}

  void reset(const Permutation& p) {
    const std::size_t n = p.size();
    if (sim_->size() != n) throw std::invalid_argument("similarity matrix size mismatch");
    self_.resize(n);
    for (Vertex v = 0; v < n; ++v) self_[v] = (*sim_)(v, p(v));
    cumulative_.resize(n);
  }

  VertexPair propose(const Permutation& p, Rng& rng) {
    const std::size_t n = p.size();
    const auto a = static_cast<Vertex>(rng.below(n));
    const Vertex pa = p(a);
    const double self_a = self_[a];
    const auto row_a = sim_->row(a);
    const auto col_pa = sim_->row(pa);  // symmetric: m[b][pi(a)] = m[pi(a)][b]
    const auto fwd = p.forward();
    double acc = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      const double gain = row_a[fwd[b]] + col_pa[b] - self_a - self_[b];
      acc += b == a ? 0.0 : std::max(gain, phi_);
      cumulative_[b] = acc;
    }
    const double target = rng.uniform01() * acc;
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    auto b = static_cast<Vertex>(std::min<std::size_t>(it - cumulative_.begin(), n - 1));
    if (b == a) b = a == 0 ? 1 : a - 1;  // unreachable except through rounding at the boundary
    return {a, b};
  }

  void on_swap(const Permutation& p, Vertex a, Vertex b) {
    self_[a] = (*sim_)(a, p(a));
    self_[b] = (*sim_)(b, p(b));
  }

 private:
  const SimilarityMatrix* sim_;
  double phi_;
  std::vector<double> self_;
  std::vector<double> cumulative_;
};

}  // namespace approxsym
