// Command-line front end: symmetry, generate, experiment, gridsearch, oracle, stats.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "approxsym/approxsym.hpp"

namespace {

using namespace approxsym;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct SymmetryArgs {
  std::string graph;
  std::string centrality = "uniform";
  double beta = GuidanceParams{}.beta;
  double phi = GuidanceParams{}.phi;
  std::uint64_t steps = 0;
  std::optional<double> t_max;
  double t_min = 0.05;
  std::uint32_t restarts = 1;
  std::uint64_t seed = 0;
  bool derangements = false;
};

nlohmann::json permutation_json(const Permutation& p) {
  return std::vector<Vertex>(p.forward().begin(), p.forward().end());
}

int run_symmetry(const SymmetryArgs& args) {
  const Graph g = read_edge_list_file(args.graph);
  AnnealConfig cfg;
  cfg.steps = args.steps;
  cfg.t_max = args.t_max;
  cfg.t_min = args.t_min;
  cfg.restarts = args.restarts;
  cfg.seed = args.seed;
  cfg.derangement_only = args.derangements;
  if (args.centrality != "uniform" && args.centrality != "none") {
    cfg.strategy = MoveStrategy::guided;
    cfg.guidance = {parse_centrality_kind(args.centrality), args.beta, args.phi};
  }
  const AnnealResult r = anneal(g, cfg);
  nlohmann::json out = {
      {"graph", args.graph},
      {"n", g.size()},
      {"m", g.edge_count()},
      {"strategy", std::string(to_string(cfg.strategy))},
      {"centrality", cfg.strategy == MoveStrategy::guided ? args.centrality : "none"},
      {"seed", args.seed},
      {"steps", r.steps},
      {"restarts", args.restarts},
      {"epsilon", r.best_epsilon},
      {"S", r.best_S},
      {"restart_epsilon", r.restart_best},
      {"accepted_moves", r.accepted_moves},
      {"proposed_moves", r.proposed_moves},
      {"wall_time_ms", std::chrono::duration<double, std::milli>(r.wall_time).count()},
      {"permutation", permutation_json(r.best_permutation)},
  };
  std::cout << out.dump() << '\n';
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  std::size_t n = 0;
  double p = 0.1;
  std::size_t k = 0;
  std::size_t m0 = 0;
  double sigma = 0.1;
  std::vector<std::size_t> lengths;
  std::size_t dimensions = 2;
  std::uint64_t seed = 0;
  std::string output;
};

int run_generate(const GenerateArgs& args) {
  ModelSpec spec;
  spec.family = parse_model_family(args.family);
  spec.n = args.n;
  spec.p = args.p;
  spec.k = args.k;
  spec.m0 = args.m0;
  spec.sigma = args.sigma;
  if (spec.family == ModelFamily::grid) {
    spec.lengths = args.lengths.empty() ? grid_lengths_for(args.n, args.dimensions) : args.lengths;
  }
  const Graph g = generate(spec, args.seed);
  if (args.output.empty() || args.output == "-") {
    std::cout << "# " << to_string(spec.family) << ' ' << spec.params() << " seed=" << args.seed << '\n';
    write_edge_list(std::cout, g);
  } else {
    write_edge_list_file(args.output, g);
  }
  return kExitOk;
}

int run_experiment_cmd(const std::string& config, const std::string& output, std::optional<std::size_t> workers,
                       bool quiet) {
  ExperimentSpec spec = load_experiment_spec(config);
  if (workers) spec.workers = *workers;
  RunOptions opts;
  opts.output = output;
  if (!quiet) {
    opts.progress = [](std::size_t done, std::size_t total) {
      std::cerr << "\r" << done << "/" << total << " runs" << std::flush;
    };
  }
  const ExperimentOutcome outcome = run_experiment(spec, opts);
  if (!quiet) {
    std::cerr << '\n';
    if (outcome.resumed > 0) std::cerr << "resumed " << outcome.resumed << " completed runs\n";
    std::cerr << "wrote " << outcome.records.size() << " records to " << output << '\n';
  }
  return kExitOk;
}

int run_gridsearch_cmd(const std::string& config, const std::string& output, std::optional<std::size_t> workers) {
  GridSearchSpec gs = load_gridsearch_spec(config);
  if (workers) gs.base.workers = *workers;
  gs.base.validate();
  const auto cells = grid_search(gs);
  if (output.empty() || output == "-") {
    write_grid_table(std::cout, cells);
  } else {
    std::ofstream out(output);
    if (!out) throw IoError("cannot open '" + output + "' for writing");
    write_grid_table(out, cells);
  }
  return kExitOk;
}

int run_oracle_cmd(const std::string& graph_path, bool derangements) {
  const Graph g = read_edge_list_file(graph_path);
  const ExactResult r = exact_symmetry(g, derangements ? SearchClass::derangements : SearchClass::non_identity);
  nlohmann::json out = {
      {"graph", graph_path},
      {"n", g.size()},
      {"m", g.edge_count()},
      {"mode", std::string(to_string(r.mode))},
      {"exact_epsilon", r.exact_epsilon},
      {"S", normalized_symmetry({r.exact_epsilon, g.size()})},
      {"searched", r.searched},
      {"witness", permutation_json(r.witness)},
  };
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_stats_cmd(const std::string& csv_path, const std::string& pair, bool per_run, const std::string& output) {
  const auto comma = pair.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == pair.size())
    throw ConfigError("--pair expects two variant labels as A,B");
  const auto records = read_records_file(csv_path);
  const auto rows = compare_variants(records, pair.substr(0, comma), pair.substr(comma + 1),
                                     per_run ? Pairing::per_run : Pairing::per_graph_mean);
  if (output.empty() || output == "-") {
    write_comparison_table(std::cout, rows);
  } else {
    std::ofstream out(output);
    if (!out) throw IoError("cannot open '" + output + "' for writing");
    write_comparison_table(out, rows);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate graph symmetry by (centrality-guided) simulated annealing"};
  app.require_subcommand(1);

  SymmetryArgs sym;
  auto* symmetry = app.add_subcommand("symmetry", "Anneal one graph and print the best permutation found");
  symmetry->add_option("graph", sym.graph, "Edge-list file")->required();
  symmetry->add_option("--centrality", sym.centrality,
                       "uniform, degree, eigenvector, pagerank, clustering or betweenness");
  symmetry->add_option("--beta", sym.beta, "Division constant");
  symmetry->add_option("--phi", sym.phi, "Probability constant");
  symmetry->add_option("--steps", sym.steps, "Moves per restart (default 400 n^2, capped at 5e6)");
  symmetry->add_option("--tmax", sym.t_max, "Initial temperature (default max(2, m/20))");
  symmetry->add_option("--tmin", sym.t_min, "Final temperature");
  symmetry->add_option("--restarts", sym.restarts, "Independent restarts");
  symmetry->add_option("--seed", sym.seed, "RNG seed");
  symmetry->add_flag("--derangements", sym.derangements, "Search fixed-point-free permutations only");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random graph as an edge list");
  generate_cmd->add_option("family", gen.family, "grid, er, ba or dd")->required();
  generate_cmd->add_option("--n", gen.n, "Vertex count");
  generate_cmd->add_option("--p", gen.p, "ER edge probability");
  generate_cmd->add_option("--k", gen.k, "BA links per new vertex");
  generate_cmd->add_option("--m0", gen.m0, "BA seed path size (default k)");
  generate_cmd->add_option("--sigma", gen.sigma, "DD divergence probability");
  generate_cmd->add_option("--lengths", gen.lengths, "Grid side lengths")->delimiter(',');
  generate_cmd->add_option("--dimensions", gen.dimensions, "Grid dimension when only --n is given (2 or 3)");
  generate_cmd->add_option("--seed", gen.seed, "RNG seed");
  generate_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string exp_config;
  std::string exp_output;
  std::optional<std::size_t> exp_workers;
  bool exp_quiet = false;
  auto* experiment = app.add_subcommand("experiment", "Run a batch experiment and write the run CSV");
  experiment->add_option("config", exp_config, "Experiment config (JSON)")->required();
  experiment->add_option("-o,--output", exp_output, "Output CSV")->required();
  experiment->add_option("--workers", exp_workers, "Worker threads (default: config or hardware)");
  experiment->add_flag("-q,--quiet", exp_quiet, "No progress output");

  std::string gs_config;
  std::string gs_output;
  std::optional<std::size_t> gs_workers;
  auto* gridsearch = app.add_subcommand("gridsearch", "Rank (beta, phi) combinations by mean S");
  gridsearch->add_option("config", gs_config, "Grid-search config (JSON)")->required();
  gridsearch->add_option("-o,--output", gs_output, "Output table (default stdout)");
  gridsearch->add_option("--workers", gs_workers, "Worker threads");

  std::string oracle_graph;
  bool oracle_derangements = false;
  auto* oracle = app.add_subcommand("oracle", "Exact symmetry by exhaustive search (n <= 10)");
  oracle->add_option("graph", oracle_graph, "Edge-list file")->required();
  oracle->add_flag("--derangements", oracle_derangements, "Search fixed-point-free permutations only");

  std::string stats_csv;
  std::string stats_pair;
  std::string stats_output;
  bool stats_per_run = false;
  auto* stats = app.add_subcommand("stats", "Paired t-tests and Cohen's d between two variants");
  stats->add_option("csv", stats_csv, "Run CSV from the experiment command")->required();
  stats->add_option("--pair", stats_pair, "Variant labels A,B (differences are B - A)")->required();
  stats->add_flag("--per-run", stats_per_run, "Pair individual runs instead of per-graph means");
  stats->add_option("-o,--output", stats_output, "Output table (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (symmetry->parsed()) return run_symmetry(sym);
    if (generate_cmd->parsed()) return run_generate(gen);
    if (experiment->parsed()) return run_experiment_cmd(exp_config, exp_output, exp_workers, exp_quiet);
    if (gridsearch->parsed()) return run_gridsearch_cmd(gs_config, gs_output, gs_workers);
    if (oracle->parsed()) return run_oracle_cmd(oracle_graph, oracle_derangements);
    if (stats->parsed()) return run_stats_cmd(stats_csv, stats_pair, stats_per_run, stats_output);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitConfig;
}
