#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "approxsym/errors.hpp"
#include "approxsym/records.hpp"
#include "approxsym/stats.hpp"

namespace approxsym {

/// Paired comparison of two variants within one (family, params, n) group.
struct ComparisonRow {
  std::string family;
  std::string params;
  std::uint64_t n = 0;
  std::string variant_a;
  std::string variant_b;
  std::size_t pairs = 0;
  double mean_a = 0.0;
  double mean_b = 0.0;
  TestReport test{};
  std::string status;  // ok | degenerate | insufficient
};

enum class Pairing { per_graph_mean, per_run };

/// Pairs records of variants a and b by graph instance (or by graph and
/// run_id) and runs the paired t-test per model group. Groups appear in the
/// order of their first record.
inline std::vector<ComparisonRow> compare_variants(const std::vector<RunRecord>& records, const std::string& a,
                                                   const std::string& b, Pairing pairing = Pairing::per_graph_mean) {
  using GroupKey = std::tuple<std::string, std::string, std::uint64_t>;
  using UnitKey = std::pair<std::uint64_t, std::uint64_t>;  // (graph_id, run_id or 0)
  struct Acc {
    double sum = 0.0;
    std::size_t count = 0;
  };
  std::vector<GroupKey> group_order;
  std::map<GroupKey, std::map<UnitKey, std::pair<Acc, Acc>>> groups;
  bool saw_a = false;
  bool saw_b = false;
  for (const auto& r : records) {
    const bool is_a = r.variant == a;
    const bool is_b = r.variant == b;
    saw_a |= is_a;
    saw_b |= is_b;
    if (!is_a && !is_b) continue;
    GroupKey gk{r.family, r.params, r.n};
    if (!groups.count(gk)) group_order.push_back(gk);
    const UnitKey uk{r.graph_id, pairing == Pairing::per_run ? r.run_id : 0};
    auto& slot = groups[gk][uk];
    Acc& acc = is_a ? slot.first : slot.second;
    acc.sum += r.S;
    ++acc.count;
  }
  if (!saw_a) throw ConfigError("variant '" + a + "' not found in records");
  if (!saw_b) throw ConfigError("variant '" + b + "' not found in records");

  std::vector<ComparisonRow> rows;
  for (const auto& gk : group_order) {
    PairedSample sample{a, b, {}, {}};
    for (const auto& [unit, accs] : groups.at(gk)) {
      if (accs.first.count == 0 || accs.second.count == 0) continue;
      sample.values_a.push_back(accs.first.sum / static_cast<double>(accs.first.count));
      sample.values_b.push_back(accs.second.sum / static_cast<double>(accs.second.count));
    }
    ComparisonRow row;
    std::tie(row.family, row.params, row.n) = gk;
    row.variant_a = a;
    row.variant_b = b;
    row.pairs = sample.values_a.size();
    for (double v : sample.values_a) row.mean_a += v;
    for (double v : sample.values_b) row.mean_b += v;
    if (row.pairs > 0) {
      row.mean_a /= static_cast<double>(row.pairs);
      row.mean_b /= static_cast<double>(row.pairs);
    }
    if (row.pairs < 2) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.test = {nan, nan, 0, nan, row.mean_b - row.mean_a, false};
      row.status = "insufficient";
    } else {
      row.test = paired_t_test(sample);
      row.status = row.test.degenerate ? "degenerate" : "ok";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_comparison_table(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  out << "family,params,n,variant_a,variant_b,pairs,mean_a,mean_b,mean_diff,t,p_value,dof,cohens_d,status\n";
  for (const auto& r : rows) {
    out << r.family << ',' << r.params << ',' << r.n << ',' << r.variant_a << ',' << r.variant_b << ',' << r.pairs
        << ',' << csv::format_double(r.mean_a) << ',' << csv::format_double(r.mean_b) << ','
        << csv::format_double(r.test.mean_diff) << ',' << csv::format_double(r.test.t_statistic) << ','
        << csv::format_double(r.test.p_value) << ',' << r.test.dof << ',' << csv::format_double(r.test.cohens_d)
        << ',' << r.status << '\n';
  }
}

}  // namespace approxsym
