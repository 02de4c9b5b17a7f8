#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "approxsym/errors.hpp"

namespace approxsym {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected, unweighted, loopless graph on vertices 0..n-1.
///
/// Neighbor lists are sorted. Graphs with at most kBitsetLimit vertices also
/// carry a dense adjacency bitset so that has_edge() is a single word lookup;
/// larger graphs fall back to binary search. Immutable once built.
class Graph {
 public:
  static constexpr std::size_t kBitsetLimit = 4096;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adjacency_(n) { build_index(); }

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints are rejected.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > std::numeric_limits<Vertex>::max()) throw std::invalid_argument("graph too large");
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") out of range for n=" + std::to_string(n));
      }
      if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    return from_adjacency(std::move(adj));
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from neighbor lists, which are symmetrized, sorted and deduplicated.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj) {
    const std::size_t n = adj.size();
    std::vector<std::vector<Vertex>> sym(n);
    for (std::size_t u = 0; u < n; ++u) {
      for (Vertex v : adj[u]) {
        if (v >= n) throw std::invalid_argument("neighbor index out of range");
        if (v == u) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        sym[u].push_back(v);
        sym[v].push_back(static_cast<Vertex>(u));
      }
    }
    Graph g;
    g.adjacency_ = std::move(sym);
    for (auto& nb : g.adjacency_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    g.build_index();
    return g;
  }

  std::size_t size() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    if (!bits_.empty()) {
      const std::size_t bit = static_cast<std::size_t>(u) * words_per_row_ * 64 + v;
      return (bits_[bit >> 6] >> (bit & 63)) & 1U;
    }
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool has_bitset() const noexcept { return !bits_.empty(); }

  /// Unordered edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  void build_index() {
    std::size_t deg_sum = 0;
    for (const auto& nb : adjacency_) deg_sum += nb.size();
    edge_count_ = deg_sum / 2;
    bits_.clear();
    const std::size_t n = adjacency_.size();
    if (n > 0 && n <= kBitsetLimit) {
      words_per_row_ = (n + 63) / 64;
      bits_.assign(n * words_per_row_, 0);
      for (std::size_t u = 0; u < n; ++u) {
        for (Vertex v : adjacency_[u]) {
          const std::size_t bit = u * words_per_row_ * 64 + v;
          bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        }
      }
    }
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Reads the plain-text edge-list format: one "u v" pair per line, 0-based,
/// '#' starts a comment, and an optional "n <count>" line fixes the vertex
/// count (otherwise n = max index + 1).
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  long long declared_n = -1;
  long long max_index = -1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto fail = [&](const std::string& why) {
      throw ConfigError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (first == "n") {
      long long count = -1;
      if (!(ls >> count) || count < 0) fail("malformed vertex-count header");
      if (declared_n >= 0) fail("duplicate vertex-count header");
      declared_n = count;
    } else {
      long long u = -1;
      long long v = -1;
      try {
        std::size_t pos = 0;
        u = std::stoll(first, &pos);
        if (pos != first.size()) fail("expected integer vertex index");
      } catch (const std::logic_error&) {
        fail("expected integer vertex index");
      }
      if (!(ls >> v)) fail("expected two vertex indices");
      if (u < 0 || v < 0) fail("negative vertex index");
      if (u > std::numeric_limits<Vertex>::max() - 1 || v > std::numeric_limits<Vertex>::max() - 1)
        fail("vertex index too large");
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      max_index = std::max({max_index, u, v});
    }
    std::string trailing;
    if (ls >> trailing) fail("unexpected trailing token '" + trailing + "'");
  }
  std::size_t n = declared_n >= 0 ? static_cast<std::size_t>(declared_n)
                                  : static_cast<std::size_t>(max_index + 1);
  if (declared_n >= 0 && max_index >= declared_n) {
    throw ConfigError("edge list references vertex " + std::to_string(max_index) +
                      " but declares n=" + std::to_string(declared_n));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("edge list: ") + e.what());
  }
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path + "'");
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace approxsym
