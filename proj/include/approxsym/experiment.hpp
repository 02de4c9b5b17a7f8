#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <nlohmann/json.hpp>

#include "approxsym/annealing.hpp"
#include "approxsym/centrality.hpp"
#include "approxsym/errors.hpp"
#include "approxsym/generators.hpp"
#include "approxsym/guidance.hpp"
#include "approxsym/records.hpp"
#include "approxsym/rng.hpp"

namespace approxsym {

/// A model template and how many independent graphs to draw from it.
struct ModelEntry {
  ModelSpec model;
  std::size_t instances = 1;
};

/// One annealing variant compared in an experiment.
struct Variant {
  std::string label;
  MoveStrategy strategy = MoveStrategy::uniform;
  GuidanceParams guidance{};

  std::string centrality_name() const {
    return strategy == MoveStrategy::guided ? std::string(to_string(guidance.centrality)) : "none";
  }
};

struct ExperimentSpec {
  std::string name = "experiment";
  std::uint64_t master_seed = 1;
  std::vector<ModelEntry> models;
  std::vector<Variant> variants;
  std::size_t repeats = 1;
  AnnealConfig anneal{};          // seed and strategy are set per run
  std::size_t workers = 0;        // 0: hardware concurrency
  bool record_wall_time = false;  // off keeps the CSV byte-reproducible

  void validate() const {
    if (models.empty()) throw ConfigError("experiment needs at least one model");
    if (variants.empty()) throw ConfigError("experiment needs at least one variant");
    if (repeats < 1) throw ConfigError("repeats must be >= 1");
    if (anneal.restarts < 1) throw ConfigError("restarts must be >= 1");
    std::set<std::string> labels;
    for (const auto& v : variants) {
      if (v.label.empty()) throw ConfigError("variant label must not be empty");
      csv::check_field(v.label, "variant");
      if (!labels.insert(v.label).second) throw ConfigError("duplicate variant label '" + v.label + "'");
      if (v.strategy == MoveStrategy::guided) v.guidance.validate();
    }
    for (const auto& m : models) {
      m.model.validate();
      if (m.instances < 1) throw ConfigError("model instances must be >= 1");
      if (m.model.vertex_count() < 2) throw ConfigError("model graphs need at least 2 vertices");
    }
  }
};

// ---------------------------------------------------------------------------
// Config parsing

namespace config {

using nlohmann::json;

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

inline void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

inline ModelEntry parse_model(const json& j) {
  if (!j.is_object()) throw ConfigError("model entry must be an object");
  reject_unknown(j, {"family", "n", "p", "k", "m0", "sigma", "lengths", "dimensions", "instances"}, "model");
  ModelEntry e;
  e.model.family = parse_model_family(get_or<std::string>(j, "family", ""));
  e.instances = get_or<std::size_t>(j, "instances", 1);
  auto& m = e.model;
  switch (m.family) {
    case ModelFamily::grid:
      if (j.contains("lengths")) {
        m.lengths = get_or<std::vector<std::size_t>>(j, "lengths", {});
      } else {
        m.lengths = grid_lengths_for(get_or<std::size_t>(j, "n", 0), get_or<std::size_t>(j, "dimensions", 2));
      }
      break;
    case ModelFamily::er:
      m.n = get_or<std::size_t>(j, "n", 0);
      m.p = get_or<double>(j, "p", -1.0);
      break;
    case ModelFamily::ba:
      m.n = get_or<std::size_t>(j, "n", 0);
      m.k = get_or<std::size_t>(j, "k", 0);
      m.m0 = get_or<std::size_t>(j, "m0", 0);
      break;
    case ModelFamily::dd:
      m.n = get_or<std::size_t>(j, "n", 0);
      m.sigma = get_or<double>(j, "sigma", 0.0);
      break;
  }
  m.validate();
  return e;
}

inline Variant parse_variant(const json& j) {
  if (!j.is_object()) throw ConfigError("variant entry must be an object");
  reject_unknown(j, {"label", "strategy", "centrality", "beta", "phi"}, "variant");
  Variant v;
  const auto strategy = get_or<std::string>(j, "strategy", j.contains("centrality") ? "guided" : "uniform");
  if (strategy == "uniform") {
    v.strategy = MoveStrategy::uniform;
  } else if (strategy == "guided") {
    v.strategy = MoveStrategy::guided;
    v.guidance.centrality = parse_centrality_kind(get_or<std::string>(j, "centrality", "eigenvector"));
    v.guidance.beta = get_or<double>(j, "beta", v.guidance.beta);
    v.guidance.phi = get_or<double>(j, "phi", v.guidance.phi);
  } else {
    throw ConfigError("unknown strategy '" + strategy + "'");
  }
  v.label = get_or<std::string>(j, "label", v.centrality_name() == "none" ? "uniform" : v.centrality_name());
  return v;
}

inline AnnealConfig parse_anneal(const json& j) {
  AnnealConfig cfg;
  if (j.is_null()) return cfg;
  if (!j.is_object()) throw ConfigError("anneal section must be an object");
  reject_unknown(j, {"steps", "t_max", "t_min", "restarts", "derangements", "forbid_identity"}, "anneal");
  cfg.steps = get_or<std::uint64_t>(j, "steps", 0);
  if (j.contains("t_max") && !j.at("t_max").is_null()) cfg.t_max = get_or<double>(j, "t_max", 0.0);
  cfg.t_min = get_or<double>(j, "t_min", cfg.t_min);
  cfg.restarts = get_or<std::uint32_t>(j, "restarts", 1);
  cfg.derangement_only = get_or<bool>(j, "derangements", false);
  cfg.forbid_identity = get_or<bool>(j, "forbid_identity", true);
  if (!(cfg.t_min > 0.0)) throw ConfigError("t_min must be > 0");
  if (cfg.t_max && *cfg.t_max < cfg.t_min) throw ConfigError("t_max must be >= t_min");
  return cfg;
}

}  // namespace config

inline ExperimentSpec parse_experiment_spec(const nlohmann::json& j) {
  using namespace config;
  if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
  reject_unknown(j,
                 {"name", "master_seed", "repeats", "workers", "record_wall_time", "anneal", "models", "variants",
                  "gridsearch"},
                 "experiment");
  ExperimentSpec s;
  s.name = get_or<std::string>(j, "name", s.name);
  s.master_seed = get_or<std::uint64_t>(j, "master_seed", s.master_seed);
  s.repeats = get_or<std::size_t>(j, "repeats", 1);
  s.workers = get_or<std::size_t>(j, "workers", 0);
  s.record_wall_time = get_or<bool>(j, "record_wall_time", false);
  s.anneal = parse_anneal(j.contains("anneal") ? j.at("anneal") : json());
  if (!j.contains("models") || !j.at("models").is_array()) throw ConfigError("experiment needs a 'models' array");
  for (const auto& m : j.at("models")) s.models.push_back(parse_model(m));
  if (j.contains("variants")) {
    if (!j.at("variants").is_array()) throw ConfigError("'variants' must be an array");
    for (const auto& v : j.at("variants")) s.variants.push_back(parse_variant(v));
  }
  return s;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  try {
    return nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
}

inline ExperimentSpec load_experiment_spec(const std::string& path) {
  ExperimentSpec s = parse_experiment_spec(load_json_file(path));
  s.validate();
  return s;
}

/// Canonical text of everything that influences the records; stored in the
/// resume manifest so that a changed config is not silently resumed.
inline std::string fingerprint(const ExperimentSpec& s) {
  std::ostringstream os;
  os << s.master_seed << '|' << s.repeats << '|' << s.record_wall_time << '|' << s.anneal.steps << '|'
     << (s.anneal.t_max ? csv::format_double(*s.anneal.t_max) : "auto") << '|' << csv::format_double(s.anneal.t_min)
     << '|' << s.anneal.restarts << '|' << s.anneal.derangement_only << '|' << s.anneal.forbid_identity;
  for (const auto& m : s.models) os << "|m:" << to_string(m.model.family) << ' ' << m.model.params() << ' ' << m.instances;
  for (const auto& v : s.variants) {
    os << "|v:" << v.label << ' ' << to_string(v.strategy) << ' ' << v.centrality_name() << ' '
       << csv::format_double(v.guidance.beta) << ' ' << csv::format_double(v.guidance.phi);
  }
  return std::to_string(fnv1a(os.str()));
}

// ---------------------------------------------------------------------------
// Planning

struct GraphInstance {
  std::uint64_t graph_id = 0;
  std::size_t model_index = 0;
  std::uint64_t seed = 0;
};

struct RunTask {
  std::size_t graph_index = 0;  // into the instance list
  std::size_t variant_index = 0;
  std::uint64_t run_id = 0;
  std::uint64_t seed = 0;
};

inline std::uint64_t graph_seed(std::uint64_t master, std::size_t model_index, std::size_t instance) {
  return derive_seed({master, fnv1a("graph"), model_index, instance});
}

inline std::uint64_t run_seed(std::uint64_t master, std::uint64_t graph_id, std::string_view variant,
                              std::uint64_t run_id) {
  return derive_seed({master, graph_id, fnv1a(variant), run_id});
}

inline std::vector<GraphInstance> plan_instances(const ExperimentSpec& s) {
  std::vector<GraphInstance> out;
  for (std::size_t mi = 0; mi < s.models.size(); ++mi)
    for (std::size_t i = 0; i < s.models[mi].instances; ++i)
      out.push_back({out.size(), mi, graph_seed(s.master_seed, mi, i)});
  return out;
}

/// Tasks ordered by (graph, variant, repeat). Throws if two runs would share a seed.
inline std::vector<RunTask> plan_tasks(const ExperimentSpec& s, const std::vector<GraphInstance>& instances) {
  std::vector<RunTask> tasks;
  tasks.reserve(instances.size() * s.variants.size() * s.repeats);
  std::unordered_set<std::uint64_t> seeds;
  for (std::size_t gi = 0; gi < instances.size(); ++gi) {
    for (std::size_t vi = 0; vi < s.variants.size(); ++vi) {
      for (std::uint64_t r = 0; r < s.repeats; ++r) {
        const std::uint64_t seed = run_seed(s.master_seed, instances[gi].graph_id, s.variants[vi].label, r);
        if (!seeds.insert(seed).second) throw ConfigError("per-run seed collision; change master_seed");
        tasks.push_back({gi, vi, r, seed});
      }
    }
  }
  return tasks;
}

inline std::string task_key(std::uint64_t graph_id, std::string_view variant, std::uint64_t run_id) {
  return std::to_string(graph_id) + '/' + std::string(variant) + '/' + std::to_string(run_id);
}

// ---------------------------------------------------------------------------
// Execution

struct RunOptions {
  std::optional<std::string> output;          // CSV path; enables incremental append and resume
  std::optional<std::size_t> stop_after;      // stop after this many newly completed runs
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct ExperimentOutcome {
  std::vector<RunRecord> records;  // sorted by (graph_id, variant order, run_id)
  bool complete = false;
  std::size_t resumed = 0;         // runs recovered from a previous partial execution
};

namespace detail {

inline std::string partial_path(const std::string& out) { return out + ".partial"; }
inline std::string manifest_path(const std::string& out) { return out + ".manifest"; }

inline void sort_records(std::vector<RunRecord>& records, const ExperimentSpec& s) {
  std::unordered_map<std::string, std::size_t> order;
  for (std::size_t i = 0; i < s.variants.size(); ++i) order[s.variants[i].label] = i;
  std::sort(records.begin(), records.end(), [&](const RunRecord& a, const RunRecord& b) {
    return std::tuple(a.graph_id, order.at(a.variant), a.run_id) < std::tuple(b.graph_id, order.at(b.variant), b.run_id);
  });
}

/// Recovers finished runs: rows of the partial file whose key is in the manifest.
inline std::vector<RunRecord> load_resume_state(const std::string& out, const std::string& expected_fingerprint) {
  std::vector<RunRecord> kept;
  const std::string mpath = manifest_path(out);
  const std::string ppath = partial_path(out);
  if (!std::filesystem::exists(mpath) || !std::filesystem::exists(ppath)) return kept;

  std::ifstream manifest(mpath);
  if (!manifest) throw IoError("cannot read manifest '" + mpath + "'");
  std::string line;
  if (!std::getline(manifest, line) || line != "spec " + expected_fingerprint) {
    throw ConfigError("manifest '" + mpath + "' belongs to a different experiment configuration");
  }
  std::unordered_set<std::string> done;
  while (std::getline(manifest, line))
    if (!line.empty()) done.insert(line);

  std::ifstream partial(ppath);
  if (!partial) throw IoError("cannot read partial results '" + ppath + "'");
  std::set<std::string> seen;
  while (std::getline(partial, line)) {
    if (line.empty() || line == csv_header()) continue;
    RunRecord r;
    try {
      r = parse_csv_row(line);
    } catch (const ConfigError&) {
      continue;  // torn final line of an interrupted write
    }
    const std::string key = task_key(r.graph_id, r.variant, r.run_id);
    if (done.count(key) && seen.insert(key).second) kept.push_back(std::move(r));
  }
  return kept;
}

}  // namespace detail

/// Runs every (graph, variant, repeat) of the spec.
///
/// Each graph is generated once and shared by all variants, so records pair
/// up by graph_id. With an output path, finished rows are appended to
/// `<out>.partial` and their keys to `<out>.manifest`; a later call with the
/// same spec resumes from there. When all runs are done the sorted CSV is
/// written to `<out>` and the side files are removed.
inline ExperimentOutcome run_experiment(const ExperimentSpec& spec, const RunOptions& opts = {}) {
  spec.validate();
  const auto instances = plan_instances(spec);
  const auto tasks = plan_tasks(spec, instances);
  const std::string fp = fingerprint(spec);

  std::vector<Graph> graphs;
  graphs.reserve(instances.size());
  for (const auto& inst : instances) graphs.push_back(generate(spec.models[inst.model_index].model, inst.seed));

  ExperimentOutcome outcome;
  std::unordered_set<std::string> finished;
  if (opts.output) {
    outcome.records = detail::load_resume_state(*opts.output, fp);
    outcome.resumed = outcome.records.size();
    for (const auto& r : outcome.records) finished.insert(task_key(r.graph_id, r.variant, r.run_id));
  }

  std::vector<const RunTask*> pending;
  for (const auto& t : tasks)
    if (!finished.count(task_key(instances[t.graph_index].graph_id, spec.variants[t.variant_index].label, t.run_id)))
      pending.push_back(&t);

  // Centralities per (graph, kind) used by any guided variant.
  std::set<CentralityKind> kinds;
  for (const auto& v : spec.variants)
    if (v.strategy == MoveStrategy::guided) kinds.insert(v.guidance.centrality);
  std::map<std::pair<std::size_t, CentralityKind>, CentralityVector> centralities;
  {
    std::set<std::size_t> needed;
    for (const RunTask* t : pending) needed.insert(t->graph_index);
    for (std::size_t gi : needed)
      for (CentralityKind kind : kinds) centralities.emplace(std::pair(gi, kind), compute_centrality(graphs[gi], kind));
  }

  std::ofstream partial;
  std::ofstream manifest;
  if (opts.output) {
    const std::string ppath = detail::partial_path(*opts.output);
    const std::string mpath = detail::manifest_path(*opts.output);
    // Rewrite the side files with just the recovered rows, dropping torn writes.
    partial.open(ppath, std::ios::trunc);
    manifest.open(mpath, std::ios::trunc);
    if (!partial || !manifest) throw IoError("cannot open '" + ppath + "' / '" + mpath + "' for writing");
    manifest << "spec " << fp << '\n';
    for (const auto& r : outcome.records) {
      partial << to_csv_row(r) << '\n';
      manifest << task_key(r.graph_id, r.variant, r.run_id) << '\n';
    }
    partial.flush();
    manifest.flush();
  }

  const std::size_t limit = opts.stop_after ? std::min(*opts.stop_after, pending.size()) : pending.size();
  std::atomic<std::size_t> next{0};
  std::mutex sink;
  std::size_t completed = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= limit) return;
      {
        std::lock_guard lock(sink);
        if (failure) return;
      }
      try {
        const RunTask& task = *pending[idx];
        const GraphInstance& inst = instances[task.graph_index];
        const Graph& g = graphs[task.graph_index];
        const Variant& variant = spec.variants[task.variant_index];

        AnnealConfig cfg = spec.anneal;
        cfg.seed = task.seed;
        cfg.strategy = variant.strategy;
        cfg.guidance = variant.guidance;
        std::optional<SimilarityMatrix> sim;
        if (variant.strategy == MoveStrategy::guided) {
          sim = build_similarity(centralities.at({task.graph_index, variant.guidance.centrality}),
                                 variant.guidance.beta);
        }
        const AnnealResult res = anneal(g, cfg, sim ? &*sim : nullptr);

        const ModelSpec& model = spec.models[inst.model_index].model;
        RunRecord rec;
        rec.family = std::string(to_string(model.family));
        rec.params = model.params();
        rec.n = g.size();
        rec.graph_id = inst.graph_id;
        rec.variant = variant.label;
        rec.centrality = variant.centrality_name();
        rec.beta = variant.strategy == MoveStrategy::guided ? variant.guidance.beta : 0.0;
        rec.phi = variant.strategy == MoveStrategy::guided ? variant.guidance.phi : 0.0;
        rec.run_id = task.run_id;
        rec.seed = task.seed;
        rec.epsilon = res.best_epsilon;
        rec.S = res.best_S;
        rec.steps = res.steps;
        rec.accepted_moves = res.accepted_moves;
        rec.wall_time_ms =
            spec.record_wall_time ? std::chrono::duration<double, std::milli>(res.wall_time).count() : 0.0;

        std::lock_guard lock(sink);
        if (opts.output) {
          partial << to_csv_row(rec) << '\n';
          partial.flush();
          manifest << task_key(rec.graph_id, rec.variant, rec.run_id) << '\n';
          manifest.flush();
          if (!partial || !manifest) throw IoError("failed appending results for '" + *opts.output + "'");
        }
        outcome.records.push_back(std::move(rec));
        ++completed;
        if (opts.progress) opts.progress(outcome.resumed + completed, tasks.size());
      } catch (...) {
        std::lock_guard lock(sink);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::size_t workers = spec.workers ? spec.workers : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(limit, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  detail::sort_records(outcome.records, spec);
  outcome.complete = outcome.records.size() == tasks.size();

  if (opts.output && outcome.complete) {
    partial.close();
    manifest.close();
    const std::string tmp = *opts.output + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw IoError("cannot open '" + tmp + "' for writing");
      write_records(out, outcome.records);
      if (!out) throw IoError("failed writing '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, *opts.output, ec);
    if (ec) throw IoError("cannot move results into '" + *opts.output + "': " + ec.message());
    std::filesystem::remove(detail::partial_path(*opts.output), ec);
    std::filesystem::remove(detail::manifest_path(*opts.output), ec);
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// Grid search over the guidance constants

struct GridSearchSpec {
  ExperimentSpec base;  // models, anneal budget, repeats, seed; variants are generated
  CentralityKind centrality = CentralityKind::eigenvector;
  std::vector<double> beta_grid{0.01, 0.05, 0.1, 0.5, 1.0};
  std::vector<double> phi_grid{0.01, 0.05, 0.1, 0.5, 1.0};
  bool include_uniform = true;
};

struct GridCell {
  std::string label;
  MoveStrategy strategy = MoveStrategy::guided;
  double beta = 0.0;
  double phi = 0.0;
  double mean_S = 0.0;
  double sd_S = 0.0;
  std::size_t runs = 0;
  std::size_t instances = 0;
};

inline std::string grid_label(double beta, double phi) {
  return "beta=" + csv::format_double(beta) + " phi=" + csv::format_double(phi);
}

inline GridSearchSpec parse_gridsearch_spec(const nlohmann::json& j) {
  using namespace config;
  GridSearchSpec g;
  nlohmann::json base = j;
  base.erase("gridsearch");
  g.base = parse_experiment_spec(base);
  if (j.contains("gridsearch")) {
    const auto& gs = j.at("gridsearch");
    if (!gs.is_object()) throw ConfigError("'gridsearch' must be an object");
    reject_unknown(gs, {"centrality", "beta", "phi", "include_uniform"}, "gridsearch");
    g.centrality = parse_centrality_kind(get_or<std::string>(gs, "centrality", "eigenvector"));
    g.beta_grid = get_or<std::vector<double>>(gs, "beta", g.beta_grid);
    g.phi_grid = get_or<std::vector<double>>(gs, "phi", g.phi_grid);
    g.include_uniform = get_or<bool>(gs, "include_uniform", true);
  }
  if (g.beta_grid.empty() || g.phi_grid.empty()) throw ConfigError("grid search needs non-empty beta and phi grids");
  return g;
}

inline GridSearchSpec load_gridsearch_spec(const std::string& path) { return parse_gridsearch_spec(load_json_file(path)); }

/// Mean S of every (beta, phi) cell over the shared instance set, sorted by
/// mean S ascending (ties keep grid order). A uniform baseline row is included
/// when requested.
inline std::vector<GridCell> grid_search(const GridSearchSpec& gs, const RunOptions& opts = {}) {
  if (gs.beta_grid.empty() || gs.phi_grid.empty()) throw ConfigError("grid search needs non-empty grids");
  ExperimentSpec spec = gs.base;
  spec.variants.clear();
  if (gs.include_uniform) spec.variants.push_back({"uniform", MoveStrategy::uniform, {}});
  for (double beta : gs.beta_grid) {
    for (double phi : gs.phi_grid) {
      spec.variants.push_back({grid_label(beta, phi), MoveStrategy::guided, {gs.centrality, beta, phi}});
    }
  }
  const ExperimentOutcome outcome = run_experiment(spec, opts);

  std::vector<GridCell> cells;
  for (const auto& v : spec.variants) {
    GridCell c;
    c.label = v.label;
    c.strategy = v.strategy;
    c.beta = v.strategy == MoveStrategy::guided ? v.guidance.beta : 0.0;
    c.phi = v.strategy == MoveStrategy::guided ? v.guidance.phi : 0.0;
    std::set<std::uint64_t> graphs;
    double sum = 0.0;
    double sum2 = 0.0;
    for (const auto& r : outcome.records) {
      if (r.variant != v.label) continue;
      sum += r.S;
      sum2 += r.S * r.S;
      ++c.runs;
      graphs.insert(r.graph_id);
    }
    c.instances = graphs.size();
    if (c.runs > 0) {
      c.mean_S = sum / static_cast<double>(c.runs);
      const double var = c.runs > 1 ? (sum2 - sum * c.mean_S) / static_cast<double>(c.runs - 1) : 0.0;
      c.sd_S = std::sqrt(std::max(0.0, var));
    }
    cells.push_back(std::move(c));
  }
  std::stable_sort(cells.begin(), cells.end(), [](const GridCell& a, const GridCell& b) { return a.mean_S < b.mean_S; });
  return cells;
}

inline void write_grid_table(std::ostream& out, const std::vector<GridCell>& cells) {
  out << "rank,label,strategy,beta,phi,mean_S,sd_S,runs,instances\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    out << i + 1 << ',' << c.label << ',' << to_string(c.strategy) << ',' << csv::format_double(c.beta) << ','
        << csv::format_double(c.phi) << ',' << csv::format_double(c.mean_S) << ',' << csv::format_double(c.sd_S)
        << ',' << c.runs << ',' << c.instances << '\n';
  }
}

}  // namespace approxsym
