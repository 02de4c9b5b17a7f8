#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "approxsym/errors.hpp"

namespace approxsym {

/// One annealing run of one variant on one graph instance: a CSV row.
struct RunRecord {
  std::string family;
  std::string params;
  std::uint64_t n = 0;
  std::uint64_t graph_id = 0;
  std::string variant;
  std::string centrality;  // "none" for the uniform strategy
  double beta = 0.0;
  double phi = 0.0;
  std::uint64_t run_id = 0;
  std::uint64_t seed = 0;
  std::int64_t epsilon = 0;
  double S = 0.0;
  std::uint64_t steps = 0;
  std::uint64_t accepted_moves = 0;
  double wall_time_ms = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

inline constexpr std::array<std::string_view, 15> kRunRecordColumns = {
    "family", "params", "n",     "graph_id", "variant", "centrality",     "beta",        "phi",
    "run_id", "seed",   "epsilon", "S",      "steps",   "accepted_moves", "wall_time_ms"};

namespace csv {

/// Shortest text that parses back to the same double.
inline std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw std::logic_error("double formatting failed");
  return std::string(buf.data(), end);
}

inline std::vector<std::string> split_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view text, std::string_view column) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError("bad value '" + std::string(text) + "' in column " + std::string(column));
  }
  return value;
}

inline void check_field(std::string_view text, std::string_view column) {
  if (text.find_first_of(",\n\r") != std::string_view::npos)
    throw ConfigError("field in column " + std::string(column) + " contains a separator");
}

}  // namespace csv

inline std::string csv_header() {
  std::string h;
  for (std::size_t i = 0; i < kRunRecordColumns.size(); ++i) {
    if (i) h += ',';
    h += kRunRecordColumns[i];
  }
  return h;
}

inline std::string to_csv_row(const RunRecord& r) {
  csv::check_field(r.family, "family");
  csv::check_field(r.params, "params");
  csv::check_field(r.variant, "variant");
  csv::check_field(r.centrality, "centrality");
  std::string row;
  auto put = [&row](std::string_view s) {
    if (!row.empty()) row += ',';
    row += s;
  };
  put(r.family);
  put(r.params);
  put(std::to_string(r.n));
  put(std::to_string(r.graph_id));
  put(r.variant);
  put(r.centrality);
  put(csv::format_double(r.beta));
  put(csv::format_double(r.phi));
  put(std::to_string(r.run_id));
  put(std::to_string(r.seed));
  put(std::to_string(r.epsilon));
  put(csv::format_double(r.S));
  put(std::to_string(r.steps));
  put(std::to_string(r.accepted_moves));
  put(csv::format_double(r.wall_time_ms));
  return row;
}

inline RunRecord parse_csv_row(std::string_view line) {
  const auto f = csv::split_line(line);
  if (f.size() != kRunRecordColumns.size()) {
    throw ConfigError("expected " + std::to_string(kRunRecordColumns.size()) + " columns, got " +
                      std::to_string(f.size()));
  }
  using csv::parse_number;
  RunRecord r;
  r.family = f[0];
  r.params = f[1];
  r.n = parse_number<std::uint64_t>(f[2], "n");
  r.graph_id = parse_number<std::uint64_t>(f[3], "graph_id");
  r.variant = f[4];
  r.centrality = f[5];
  r.beta = parse_number<double>(f[6], "beta");
  r.phi = parse_number<double>(f[7], "phi");
  r.run_id = parse_number<std::uint64_t>(f[8], "run_id");
  r.seed = parse_number<std::uint64_t>(f[9], "seed");
  r.epsilon = parse_number<std::int64_t>(f[10], "epsilon");
  r.S = parse_number<double>(f[11], "S");
  r.steps = parse_number<std::uint64_t>(f[12], "steps");
  r.accepted_moves = parse_number<std::uint64_t>(f[13], "accepted_moves");
  r.wall_time_ms = parse_number<double>(f[14], "wall_time_ms");
  return r;
}

inline void write_records(std::ostream& out, const std::vector<RunRecord>& records) {
  out << csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

/// Reads a RunRecord CSV; the header must match the column list exactly.
inline std::vector<RunRecord> read_records(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header()) throw ConfigError("unexpected CSV header: " + line);
  std::vector<RunRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_csv_row(line));
    } catch (const ConfigError& e) {
      throw ConfigError("CSV line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

inline std::vector<RunRecord> read_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open CSV '" + path + "'");
  return read_records(in);
}

}  // namespace approxsym
