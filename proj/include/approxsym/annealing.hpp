#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "approxsym/energy.hpp"
#include "approxsym/guidance.hpp"
#include "approxsym/permutation.hpp"
#include "approxsym/rng.hpp"

namespace approxsym {

enum class MoveStrategy { uniform, guided };

inline constexpr std::string_view to_string(MoveStrategy s) {
  return s == MoveStrategy::uniform ? "uniform" : "guided";
}

inline constexpr std::uint64_t kMaxDefaultSteps = 5'000'000;

struct AnnealConfig {
  std::uint64_t steps = 0;        // 0: 400 n^2, capped at kMaxDefaultSteps
  std::optional<double> t_max;    // unset: max(2, m / 20)
  double t_min = 0.05;
  MoveStrategy strategy = MoveStrategy::uniform;
  GuidanceParams guidance{};
  std::uint32_t restarts = 1;
  std::uint64_t seed = 0;
  bool forbid_identity = true;
  bool derangement_only = false;
  std::size_t trace_points = 0;   // 0 disables the energy trace
};

struct TracePoint {
  std::uint64_t step = 0;
  double temperature = 0.0;
  std::int64_t epsilon = 0;
  std::int64_t best_epsilon = 0;
  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct AnnealResult {
  Permutation best_permutation;
  std::int64_t best_epsilon = 0;
  double best_S = 0.0;
  std::vector<std::int64_t> restart_best;  // best epsilon of each restart, in order
  std::vector<TracePoint> energy_trace;    // of the restart that produced the best state
  std::uint64_t accepted_moves = 0;
  std::uint64_t proposed_moves = 0;
  std::uint64_t steps = 0;                 // resolved per-restart step budget
  std::chrono::nanoseconds wall_time{0};
};

inline std::uint64_t default_steps(std::size_t n) {
  const std::uint64_t nn = static_cast<std::uint64_t>(n) * n;
  return std::min<std::uint64_t>(400 * nn, kMaxDefaultSteps);
}

inline double default_t_max(const Graph& g) {
  return std::max(2.0, static_cast<double>(g.edge_count()) / 20.0);
}

/// Fills unset defaults from the graph and validates.
inline AnnealConfig resolve_config(const Graph& g, AnnealConfig cfg) {
  if (cfg.steps == 0) cfg.steps = default_steps(g.size());
  if (!cfg.t_max) cfg.t_max = std::max(default_t_max(g), cfg.t_min);
  if (!(cfg.t_min > 0.0) || !std::isfinite(cfg.t_min)) throw ConfigError("t_min must be > 0");
  if (!(*cfg.t_max >= cfg.t_min) || !std::isfinite(*cfg.t_max)) throw ConfigError("t_max must be >= t_min");
  if (cfg.restarts < 1) throw ConfigError("restarts must be >= 1");
  if (cfg.strategy == MoveStrategy::guided) cfg.guidance.validate();
  return cfg;
}

/// Geometric cooling: T(k) = t_max (t_min / t_max)^(k / steps).
inline double schedule_temperature(double t_max, double t_min, std::uint64_t steps, std::uint64_t k) {
  if (steps == 0) return t_max;
  return t_max * std::pow(t_min / t_max, static_cast<double>(k) / static_cast<double>(steps));
}

/// RNG stream of restart r. Each restart otherwise repeats the same schedule.
inline std::uint64_t restart_seed(std::uint64_t seed, std::uint32_t restart) {
  return derive_seed({seed, 0x7265737461727400ULL, restart});
}

/// One proposal as seen by an annealing observer.
struct StepEvent {
  enum class Outcome { accepted, rejected_metropolis, rejected_identity, rejected_fixed_point };
  std::uint32_t restart = 0;
  std::uint64_t step = 0;
  Vertex a = 0;
  Vertex b = 0;
  std::int64_t delta = 0;  // 0 when rejected before evaluation
  double temperature = 0.0;
  Outcome outcome = Outcome::accepted;
};

struct NoObserver {
  void operator()(const StepEvent&) const noexcept {}
};

namespace detail {

struct RestartOutcome {
  Permutation best;
  std::int64_t best_epsilon = 0;
  std::vector<TracePoint> trace;
  std::uint64_t accepted = 0;
  std::uint64_t proposed = 0;
};

template <typename Observer>
RestartOutcome anneal_once(const Graph& g, const AnnealConfig& cfg, const SimilarityMatrix* sim,
                           std::uint32_t restart, Observer& observe) {
  using Outcome = StepEvent::Outcome;
  const std::size_t n = g.size();
  Rng rng(restart_seed(cfg.seed, restart));

  Permutation current;
  if (cfg.derangement_only) {
    current = Permutation::random_derangement(n, rng);
  } else {
    do {
      current = Permutation::random(n, rng);
    } while (cfg.forbid_identity && current.is_identity());
  }

  std::int64_t eps = energy(g, current).epsilon;
  std::size_t fixed = current.fixed_points();

  RestartOutcome out;
  out.best = current;
  out.best_epsilon = eps;

  std::optional<GuidedProposer> guided;
  if (cfg.strategy == MoveStrategy::guided) {
    guided.emplace(*sim, cfg.guidance.phi);
    guided->reset(current);
  }

  const double t_max = *cfg.t_max;
  const double t_min = cfg.t_min;
  const std::uint64_t steps = cfg.steps;
  // T(k) = t_max * ratio^k, updated multiplicatively and resynchronized with
  // the closed form every 4096 steps.
  const double ratio = std::pow(t_min / t_max, 1.0 / static_cast<double>(steps));
  double temperature = t_max;

  std::uint64_t trace_every = 0;
  if (cfg.trace_points > 0) {
    trace_every = std::max<std::uint64_t>(1, steps / cfg.trace_points);
    out.trace.reserve(cfg.trace_points + 1);
  }

  for (std::uint64_t k = 0; k < steps; ++k) {
    if ((k & 4095) == 0) {
      temperature = schedule_temperature(t_max, t_min, steps, k);
    } else {
      temperature *= ratio;
    }
    if (trace_every != 0 && k % trace_every == 0) out.trace.push_back({k, temperature, eps, out.best_epsilon});

    const auto [a, b] = guided ? guided->propose(current, rng) : uniform_move(n, rng);
    ++out.proposed;

    const Vertex pa = current(a);
    const Vertex pb = current(b);
    const std::size_t fixed_after =
        fixed - (pa == a) - (pb == b) + (pb == a) + (pa == b);
    if (cfg.derangement_only && fixed_after != 0) {
      observe(StepEvent{restart, k, a, b, 0, temperature, Outcome::rejected_fixed_point});
      continue;
    }
    if (cfg.forbid_identity && fixed_after == n) {
      observe(StepEvent{restart, k, a, b, 0, temperature, Outcome::rejected_identity});
      continue;
    }

    const std::int64_t delta = energy_delta(g, current, a, b);
    if (delta > 0 && !(rng.uniform01() < std::exp(-static_cast<double>(delta) / temperature))) {
      observe(StepEvent{restart, k, a, b, delta, temperature, Outcome::rejected_metropolis});
      continue;
    }
    observe(StepEvent{restart, k, a, b, delta, temperature, Outcome::accepted});

    current.swap_images(a, b);
    eps += delta;
    fixed = fixed_after;
    ++out.accepted;
    if (guided) guided->on_swap(current, a, b);
    if (eps < out.best_epsilon) {
      out.best_epsilon = eps;
      out.best = current;
    }
  }
  if (trace_every != 0) out.trace.push_back({steps, t_min, eps, out.best_epsilon});
  return out;
}

}  // namespace detail

/// Simulated annealing over permutations minimizing epsilon(A, P).
///
/// `sim` is required for the guided strategy; pass a prebuilt matrix to share
/// it across runs on the same graph. `observe` sees every proposal.
/// Deterministic in (g, cfg) apart from wall_time.
template <typename Observer>
AnnealResult anneal(const Graph& g, const AnnealConfig& config, const SimilarityMatrix* sim,
                    Observer&& observe) {
  const auto start = std::chrono::steady_clock::now();
  if (g.size() < 2) throw std::invalid_argument("annealing needs at least 2 vertices");
  const AnnealConfig cfg = resolve_config(g, config);
  if (cfg.strategy == MoveStrategy::guided) {
    if (sim == nullptr) throw std::invalid_argument("guided annealing needs a similarity matrix");
    if (sim->size() != g.size()) throw std::invalid_argument("similarity matrix size mismatch");
  }

  AnnealResult result;
  result.steps = cfg.steps;
  for (std::uint32_t r = 0; r < cfg.restarts; ++r) {
    detail::RestartOutcome run = detail::anneal_once(g, cfg, sim, r, observe);
    result.accepted_moves += run.accepted;
    result.proposed_moves += run.proposed;
    result.restart_best.push_back(run.best_epsilon);
    if (r == 0 || run.best_epsilon < result.best_epsilon) {
      result.best_epsilon = run.best_epsilon;
      result.best_permutation = std::move(run.best);
      result.energy_trace = std::move(run.trace);
    }
  }
  const Energy check = energy(g, result.best_permutation);
  if (check.epsilon != result.best_epsilon) throw std::logic_error("incremental energy drifted");
  result.best_S = normalized_symmetry(check);
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

inline AnnealResult anneal(const Graph& g, const AnnealConfig& config, const SimilarityMatrix* sim) {
  return anneal(g, config, sim, NoObserver{});
}

/// Convenience overload that computes the similarity matrix when needed.
inline AnnealResult anneal(const Graph& g, const AnnealConfig& config) {
  if (config.strategy == MoveStrategy::guided) {
    config.guidance.validate();
    const SimilarityMatrix sim =
        build_similarity(compute_centrality(g, config.guidance.centrality), config.guidance.beta);
    return anneal(g, config, &sim);
  }
  return anneal(g, config, nullptr);
}

}  // namespace approxsym
