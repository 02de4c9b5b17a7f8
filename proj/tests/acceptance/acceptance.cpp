// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                  run criteria 1-12
//   acceptance --criterion 6    run one criterion (repeatable)
//
// Experiment CSVs are written to --out (default: current directory) next to a
// fingerprint file, and reused on a later invocation with the same config.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "approxsym/approxsym.hpp"
#include "centrality_oracles.hpp"
#include "stats_oracle.hpp"
#include "test_graphs.hpp"

namespace {

using namespace approxsym;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> run;
};

fs::path g_out_dir = ".";
bool g_verbose = false;
constexpr std::uint64_t kMasterSeeds[] = {1, 2, 3};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int precision = 3) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

void log(const std::string& line) {
  if (g_verbose) std::cerr << "  " << line << '\n';
}

// ---------------------------------------------------------------------------
// Experiment helpers

/// Runs the experiment, or loads its CSV when a previous invocation wrote one
/// for an identical config.
std::vector<RunRecord> run_cached(const ExperimentSpec& spec, const std::string& name) {
  const fs::path csv = g_out_dir / (name + ".csv");
  const fs::path stamp = g_out_dir / (name + ".fingerprint");
  const std::string fp = fingerprint(spec);
  if (fs::exists(csv) && fs::exists(stamp)) {
    std::ifstream in(stamp);
    std::string stored;
    std::getline(in, stored);
    if (stored == fp) {
      log("reusing " + csv.string());
      return read_records_file(csv.string());
    }
  }
  fs::remove(stamp);
  RunOptions opts;
  opts.output = csv.string();
  const auto start = Clock::now();
  auto outcome = run_experiment(spec, opts);
  std::ofstream(stamp) << fp << '\n';
  log("ran " + name + " (" + std::to_string(outcome.records.size()) + " runs, " + fmt(seconds_since(start), 4) +
      " s)");
  return std::move(outcome.records);
}

Variant uniform_variant() { return {"uniform", MoveStrategy::uniform, {}}; }

Variant guided_variant(CentralityKind kind) {
  return {std::string(to_string(kind)), MoveStrategy::guided, {kind, GuidanceParams{}.beta, GuidanceParams{}.phi}};
}

ModelSpec ba_model(std::size_t n) { return {ModelFamily::ba, {}, n, 0.0, 5, 0, 0.0}; }
ModelSpec dd_model(std::size_t n) { return {ModelFamily::dd, {}, n, 0.0, 0, 0, 0.1}; }
ModelSpec er_model(std::size_t n) { return {ModelFamily::er, {}, n, 0.1, 0, 0, 0.0}; }
ModelSpec grid_model(std::vector<std::size_t> lengths) { return {ModelFamily::grid, std::move(lengths), 0, 0, 0, 0, 0}; }

ExperimentSpec paired_spec(const std::string& name, std::uint64_t master, std::vector<ModelEntry> models,
                           std::vector<Variant> variants) {
  ExperimentSpec s;
  s.name = name;
  s.master_seed = master;
  s.models = std::move(models);
  s.variants = std::move(variants);
  return s;
}

/// Paired t-test of b against a; passes when guided (b) has significantly lower S.
struct Significance {
  ComparisonRow row;
  bool pass = false;
  std::string text() const {
    return row.params + ": pairs=" + std::to_string(row.pairs) + " mean_diff=" + fmt(row.test.mean_diff) +
           " p=" + fmt(row.test.p_value) + " d=" + fmt(row.test.cohens_d);
  }
};

std::vector<Significance> significance(const std::vector<RunRecord>& records, const std::string& a,
                                       const std::string& b) {
  std::vector<Significance> out;
  for (auto& row : compare_variants(records, a, b)) {
    Significance s{row, false};
    s.pass = row.test.p_value < 0.05 && row.test.mean_diff < 0 && row.test.cohens_d < 0;
    out.push_back(std::move(s));
  }
  return out;
}

/// Stochastic rule: the per-seed check must hold for at least 2 of 3 master seeds.
Verdict two_of_three(const std::string& tag, const std::function<std::pair<bool, std::string>(std::uint64_t)>& per_seed) {
  int passed = 0;
  std::string detail;
  for (std::uint64_t seed : kMasterSeeds) {
    const auto [ok, text] = per_seed(seed);
    passed += ok;
    detail += "\n    " + tag + " seed " + std::to_string(seed) + (ok ? " pass: " : " FAIL: ") + text;
  }
  return {passed >= 2, std::to_string(passed) + "/3 master seeds pass" + detail};
}

// ---------------------------------------------------------------------------
// Criteria

Verdict energy_correctness() {
  const auto start = Clock::now();
  Rng rng(derive_seed({101}));
  std::size_t mismatches = 0;
  std::size_t checks = 0;
  for (int gi = 0; gi < 200; ++gi) {
    const std::size_t n = 2 + rng.below(19);
    const double p = 0.05 + 0.9 * rng.uniform01();
    const Graph g = erdos_renyi(n, p, rng);
    for (int pi = 0; pi < 50; ++pi) {
      const Permutation perm = Permutation::random(n, rng);
      ++checks;
      mismatches += energy(g, perm).epsilon != energy_dense_oracle(g, perm).epsilon;
    }
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && t < 10.0,
          std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches, " + fmt(t) + " s (< 10 s)"};
}

Verdict delta_consistency() {
  const auto start = Clock::now();
  Rng rng(derive_seed({102}));
  std::size_t mismatches = 0;
  for (int gi = 0; gi < 20; ++gi) {
    const std::size_t n = 10 + rng.below(51);
    const Graph g = erdos_renyi(n, 0.05 + 0.5 * rng.uniform01(), rng);
    Permutation p = Permutation::random(n, rng);
    std::int64_t eps = energy(g, p).epsilon;
    for (int step = 0; step < 10'000; ++step) {
      const auto [a, b] = uniform_move(n, rng);
      eps += energy_delta(g, p, a, b);
      p.swap_images(a, b);
      mismatches += eps != energy(g, p).epsilon;
    }
  }
  const double t = seconds_since(start);
  return {mismatches == 0 && t < 30.0,
          "200000 chained steps on 20 graphs, " + std::to_string(mismatches) + " mismatches, " + fmt(t) + " s (< 30 s)"};
}

Verdict oracle_optimality() {
  const auto start = Clock::now();
  Rng rng(derive_seed({103}));
  int equal = 0;
  int below = 0;
  for (int i = 0; i < 20; ++i) {
    const Graph g = erdos_renyi(7, 0.3, rng);
    AnnealConfig cfg;
    cfg.steps = 50'000;
    cfg.restarts = 5;
    cfg.seed = derive_seed({103, static_cast<std::uint64_t>(i)});
    const auto r = anneal(g, cfg);
    const auto exact = exact_symmetry(g);
    equal += r.best_epsilon == exact.exact_epsilon;
    below += r.best_epsilon < exact.exact_epsilon;
  }
  const double t = seconds_since(start);
  return {equal >= 16 && below == 0 && t < 120.0,
          std::to_string(equal) + "/20 equal to exhaustive optimum (>= 16), " + std::to_string(below) + " below, " +
              fmt(t) + " s (< 120 s)"};
}

Verdict automorphism_recovery() {
  using namespace testing_graphs;
  const auto start = Clock::now();
  std::vector<std::pair<std::string, Graph>> graphs;
  for (std::size_t n = 3; n <= 20; ++n) graphs.emplace_back("C" + std::to_string(n), cycle(n));
  graphs.emplace_back("R5x4", grid_graph({5, 4}));
  graphs.emplace_back("R2x5x5", grid_graph({2, 5, 5}));
  for (std::size_t n = 3; n <= 12; ++n) graphs.emplace_back("K" + std::to_string(n), complete(n));

  // Gated strategy: eigenvector-guided at default budget. Uniform is reported alongside.
  std::string failures;
  std::string uniform_report;
  int solved = 0;
  int total = 0;
  for (const auto& [name, g] : graphs) {
    int guided_ok = 0;
    int uniform_ok = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      AnnealConfig cfg;
      cfg.seed = seed;
      cfg.strategy = MoveStrategy::guided;
      const bool ok = anneal(g, cfg).best_epsilon == 0;
      guided_ok += ok;
      AnnealConfig ucfg;
      ucfg.seed = seed;
      uniform_ok += anneal(g, ucfg).best_epsilon == 0;
    }
    ++total;
    solved += guided_ok == 10;
    if (guided_ok < 10) failures += " " + name + "=" + std::to_string(guided_ok) + "/10";
    if (uniform_ok < 10) uniform_report += " " + name + "=" + std::to_string(uniform_ok) + "/10";
  }
  const double t = seconds_since(start);
  std::string detail = std::to_string(solved) + "/" + std::to_string(total) +
                       " graphs reach epsilon 0 on 10/10 seeds (eigenvector-guided, default budget)";
  if (!failures.empty()) detail += "; short:" + failures;
  detail += "; " + fmt(t) + " s incl. uniform runs (< 180 s)";
  detail += "\n    info: uniform strategy below 10/10:" + (uniform_report.empty() ? std::string(" none") : uniform_report);
  return {solved == total && t < 180.0, detail};
}

Verdict centrality_suite() {
  using namespace centrality_oracles;
  const auto start = Clock::now();
  std::vector<std::string> problems;
  Rng rng(derive_seed({105}));

  double worst_bc = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng.below(9);
    const Graph g = erdos_renyi(n, 0.15 + 0.7 * rng.uniform01(), rng);
    const auto got = betweenness_centrality(g);
    const auto want = enumerated_betweenness(g);
    for (std::size_t v = 0; v < n; ++v) worst_bc = std::max(worst_bc, std::abs(got[v] - want[v]));
  }
  if (worst_bc > 1e-9) problems.push_back("betweenness error " + fmt(worst_bc));

  double worst_pr_sum = 0.0;
  double worst_residual = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 5 + rng.below(100);
    const Graph g = i % 2 ? erdos_renyi(n, 0.02 + 0.2 * rng.uniform01(), rng) : barabasi_albert(n, 2, 2, rng);
    const auto pr = pagerank(g);
    double sum = 0.0;
    for (double x : pr.values) sum += x;
    worst_pr_sum = std::max(worst_pr_sum, std::abs(sum - 1.0));
    if (g.edge_count() > 0) worst_residual = std::max(worst_residual, eigen_residual(g, eigenvector_centrality(g).values));
  }
  if (worst_pr_sum > 1e-9) problems.push_back("pagerank sum off by " + fmt(worst_pr_sum));
  if (!(worst_residual < 1e-6)) problems.push_back("eigen residual " + fmt(worst_residual));

  constexpr CentralityKind kinds[] = {CentralityKind::degree, CentralityKind::eigenvector, CentralityKind::pagerank,
                                      CentralityKind::clustering, CentralityKind::betweenness};
  double worst_spread = 0.0;
  for (const Graph& g : vertex_transitive_family()) {
    for (auto kind : kinds) {
      const auto c = compute_centrality(g, kind);
      const auto [lo, hi] = std::minmax_element(c.values.begin(), c.values.end());
      worst_spread = std::max(worst_spread, *hi - *lo);
    }
  }
  if (worst_spread > 1e-9) problems.push_back("vertex-transitive spread " + fmt(worst_spread));

  // Automorphisms: grid reflections along each axis, cycle rotations and reflections.
  double worst_invariance = 0.0;
  auto check = [&](const Graph& g, const std::vector<Vertex>& images) {
    for (auto kind : kinds) {
      const auto c = compute_centrality(g, kind);
      for (Vertex v = 0; v < g.size(); ++v) worst_invariance = std::max(worst_invariance, std::abs(c[images[v]] - c[v]));
    }
  };
  for (const std::vector<std::size_t>& lengths :
       {std::vector<std::size_t>{5, 4}, {5, 20}, {2, 5, 5}, {2, 5, 10}, {3, 3, 3}}) {
    const Graph g = grid_graph(lengths);
    const std::size_t d = lengths.size();
    std::vector<std::size_t> stride(d, 1);
    for (std::size_t i = d - 1; i-- > 0;) stride[i] = stride[i + 1] * lengths[i + 1];
    for (std::size_t axis = 0; axis < d; ++axis) {
      std::vector<Vertex> images(g.size());
      for (std::size_t v = 0; v < g.size(); ++v) {
        const std::size_t coord = (v / stride[axis]) % lengths[axis];
        const auto shift = static_cast<std::int64_t>(lengths[axis] - 1) - 2 * static_cast<std::int64_t>(coord);
        images[v] = static_cast<Vertex>(static_cast<std::int64_t>(v) + shift * static_cast<std::int64_t>(stride[axis]));
      }
      check(g, images);
    }
  }
  for (std::size_t n : {6U, 11U, 20U}) {
    const Graph g = testing_graphs::cycle(n);
    std::vector<Vertex> rot(n), refl(n);
    for (std::size_t v = 0; v < n; ++v) {
      rot[v] = static_cast<Vertex>((v + 3) % n);
      refl[v] = static_cast<Vertex>((n - v) % n);
    }
    check(g, rot);
    check(g, refl);
  }
  if (worst_invariance > 1e-9) problems.push_back("automorphism invariance error " + fmt(worst_invariance));

  const double t = seconds_since(start);
  if (t >= 60.0) problems.push_back("runtime " + fmt(t) + " s");
  std::string detail = "betweenness err " + fmt(worst_bc) + ", pagerank |sum-1| " + fmt(worst_pr_sum) +
                       ", eigen residual " + fmt(worst_residual) + ", transitive spread " + fmt(worst_spread) +
                       ", invariance err " + fmt(worst_invariance) + ", " + fmt(t) + " s (< 60 s)";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

std::vector<RunRecord> paired_runs(const std::string& tag, std::uint64_t master, const ModelSpec& model,
                                   std::size_t instances, CentralityKind kind) {
  const auto spec = paired_spec(tag, master, {{model, instances}}, {uniform_variant(), guided_variant(kind)});
  return run_cached(spec, tag + "_" + std::to_string(model.vertex_count()) + "_seed" + std::to_string(master));
}

Verdict ba_significance() {
  return two_of_three("ba", [](std::uint64_t master) {
    const auto records = paired_runs("ba", master, ba_model(150), 50, CentralityKind::eigenvector);
    const auto s = significance(records, "uniform", "eigenvector").at(0);
    return std::pair(s.pass, s.text());
  });
}

Verdict dd_significance() {
  return two_of_three("dd", [](std::uint64_t master) {
    const auto records = paired_runs("dd", master, dd_model(150), 50, CentralityKind::pagerank);
    const auto s = significance(records, "uniform", "pagerank").at(0);
    return std::pair(s.pass, s.text());
  });
}

Verdict grid_improvement() {
  const auto spec = paired_spec("grid", kMasterSeeds[0],
                                {{grid_model({5, 20}), 50}, {grid_model({2, 5, 10}), 50}},
                                {uniform_variant(), guided_variant(CentralityKind::betweenness)});
  const auto records = run_cached(spec, "grid_seed1");
  bool pass = true;
  std::string detail;
  for (const auto& s : significance(records, "uniform", "betweenness")) {
    pass &= s.pass;
    detail += "\n    " + s.text();
  }
  return {pass, "both grid shapes significant" + std::string(pass ? "" : ": NO") + detail};
}

Verdict er_null() {
  std::vector<Variant> variants{uniform_variant()};
  for (auto kind : {CentralityKind::degree, CentralityKind::eigenvector, CentralityKind::pagerank,
                    CentralityKind::clustering, CentralityKind::betweenness})
    variants.push_back(guided_variant(kind));
  const auto spec = paired_spec("er", kMasterSeeds[0], {{er_model(100), 50}}, variants);
  const auto records = run_cached(spec, "er_seed1");
  bool small = true;
  std::string detail;
  std::ofstream report(g_out_dir / "er_report.csv");
  bool header = true;
  for (std::size_t i = 1; i < variants.size(); ++i) {
    const auto rows = compare_variants(records, "uniform", variants[i].label);
    std::ostringstream table;
    write_comparison_table(table, rows);
    const std::string text = table.str();
    report << (header ? text : text.substr(text.find('\n') + 1));
    header = false;
    const auto& r = rows.at(0);
    const bool ok = std::abs(r.test.cohens_d) < 0.3;
    small &= ok;
    detail += "\n    " + variants[i].label + ": d=" + fmt(r.test.cohens_d) + " p=" + fmt(r.test.p_value) +
              (ok ? " (|d| < 0.3)" : " (|d| >= 0.3, logged)");
  }
  // Non-fatal: a null result cannot be guaranteed, so only the report is gated.
  return {true, std::string("report written to er_report.csv; soft |d| < 0.3 check ") +
                    (small ? "holds" : "does not hold (logged, non-fatal)") + detail};
}

Verdict scaling_trend() {
  return two_of_three("scaling", [](std::uint64_t master) {
    const auto small = paired_runs("ba", master, ba_model(150), 50, CentralityKind::eigenvector);
    const auto large = paired_runs("ba", master, ba_model(300), 50, CentralityKind::eigenvector);
    const auto d150 = significance(small, "uniform", "eigenvector").at(0).row.test.cohens_d;
    const auto d300 = significance(large, "uniform", "eigenvector").at(0).row.test.cohens_d;
    return std::pair(std::abs(d300) >= std::abs(d150), "|d| n=150 " + fmt(std::abs(d150)) + ", n=300 " + fmt(std::abs(d300)));
  });
}

Verdict determinism() {
  const fs::path config = fs::path(APPROXSYM_SOURCE_DIR) / "configs" / "smoke.json";
  ExperimentSpec spec = load_experiment_spec(config.string());
  std::vector<std::string> texts;
  for (std::size_t workers : {1U, 2U, 1U}) {
    spec.workers = workers;
    const fs::path out = g_out_dir / ("determinism_" + std::to_string(texts.size()) + ".csv");
    fs::remove(out);
    RunOptions opts;
    opts.output = out.string();
    run_experiment(spec, opts);
    std::ifstream in(out, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    texts.push_back(os.str());
  }
  const bool same = texts[0] == texts[1] && texts[1] == texts[2] && !texts[0].empty();
  const auto rows = std::count(texts[0].begin(), texts[0].end(), '\n') - 1;
  return {same, std::string("configs/smoke.json rerun 3x (workers 1, 2, 1): ") + (same ? "byte-identical" : "DIFFERENT") +
                    ", " + std::to_string(rows) + " rows"};
}

Verdict stats_suite() {
  double worst = 0.0;
  for (int dof = 1; dof <= 100; ++dof) {
    const auto ladder = stats_oracle::t_cdf_ladder(dof, 0.25, 40);
    for (int k = 0; k <= 40; ++k) {
      const double t = 0.25 * k;
      worst = std::max(worst, std::abs(student_t_cdf(t, dof) - ladder[k]));
      worst = std::max(worst, std::abs(student_t_cdf(-t, dof) - (1.0 - ladder[k])));
      worst = std::max(worst, std::abs(two_sided_p(t, dof) - 2.0 * (1.0 - ladder[k])));
    }
  }
  std::vector<std::string> problems;
  if (worst > 1e-8) problems.push_back("t-distribution error " + fmt(worst));

  const auto zero = paired_t_test({"a", "b", {1, 2, 3}, {1, 2, 3}});
  if (!(zero.degenerate && zero.t_statistic == 0 && zero.p_value == 1 && zero.cohens_d == 0))
    problems.push_back("zero-variance zero-mean convention");
  const auto shifted = paired_t_test({"a", "b", {1, 2, 3}, {0, 1, 2}});
  if (!(shifted.degenerate && std::isinf(shifted.t_statistic) && shifted.t_statistic < 0 && shifted.p_value == 0 &&
        std::isinf(shifted.cohens_d) && shifted.cohens_d < 0))
    problems.push_back("zero-variance shifted convention");
  const auto worked = paired_t_test({"a", "b", {0, 0, 0}, {1, 2, 3}});
  const double t = 2 * std::sqrt(3.0);
  if (std::abs(worked.t_statistic - t) > 1e-12 || std::abs(worked.p_value - (1 - t / std::sqrt(t * t + 2))) > 1e-12)
    problems.push_back("worked example");

  std::string detail = "max |error| vs Simpson integration over dof 1..100, t in [-10, 10]: " + fmt(worst) +
                       " (<= 1e-8); degenerate conventions checked";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  std::string out_dir = ".";
  app.add_option("--criterion", selected, "Criterion number(s) to run (default: all)");
  app.add_option("--out", out_dir, "Directory for experiment CSVs");
  app.add_flag("-v,--verbose", g_verbose, "Progress notes on stderr");
  CLI11_PARSE(app, argc, argv);
  g_out_dir = out_dir;
  fs::create_directories(g_out_dir);

  const std::vector<Criterion> criteria{
      {1, "energy correctness", energy_correctness},
      {2, "delta consistency", delta_consistency},
      {3, "oracle optimality", oracle_optimality},
      {4, "automorphism recovery", automorphism_recovery},
      {5, "centrality suite", centrality_suite},
      {6, "BA significance", ba_significance},
      {7, "DD significance", dd_significance},
      {8, "grid improvement", grid_improvement},
      {9, "ER null result", er_null},
      {10, "scaling trend", scaling_trend},
      {11, "determinism", determinism},
      {12, "stats unit suite", stats_suite},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const char* tag = v.pass ? "PASS" : "FAIL";
    std::cout << tag << " criterion " << c.id << " (" << c.title << ", " << fmt(seconds_since(start), 4)
              << " s): " << v.detail << std::endl;
    failed += !v.pass;
  }
  if (selected.empty()) std::cout << "SKIP criterion 13 (plot component is not part of this build)" << std::endl;
  return failed == 0 ? 0 : 1;
}
