#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "approxsym/energy.hpp"
#include "approxsym/graph.hpp"
#include "approxsym/permutation.hpp"

namespace approxsym {

enum class SearchClass { non_identity, derangements };

inline constexpr std::string_view to_string(SearchClass c) {
  return c == SearchClass::non_identity ? "non-identity" : "derangements-only";
}

struct ExactResult {
  std::int64_t exact_epsilon = 0;
  Permutation witness;
  std::uint64_t searched = 0;
  SearchClass mode = SearchClass::non_identity;
};

inline constexpr std::size_t kExactSearchLimit = 10;

/// Minimum epsilon over every permutation of the class, by lexicographic
/// enumeration. The witness is the lexicographically smallest minimizer.
inline ExactResult exact_symmetry(const Graph& g, SearchClass mode = SearchClass::non_identity) {
  const std::size_t n = g.size();
  if (n > kExactSearchLimit) throw std::invalid_argument("exhaustive search limited to n <= 10");
  if (n < 2) throw std::invalid_argument("exhaustive search needs n >= 2");

  const std::vector<Edge> edges = g.edges();
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});

  ExactResult best;
  best.mode = mode;
  best.exact_epsilon = std::numeric_limits<std::int64_t>::max();
  std::vector<Vertex> best_images;
  bool first = true;  // the identity is first in lexicographic order
  do {
    const bool skip = mode == SearchClass::non_identity
                          ? first
                          : std::any_of(images.begin(), images.end(), [i = Vertex{0}](Vertex v) mutable {
                              return v == i++;
                            });
    first = false;
    if (skip) continue;
    ++best.searched;
    std::int64_t eps = 0;
    for (const Edge& e : edges) eps += !g.has_edge(images[e.u], images[e.v]);
    if (eps < best.exact_epsilon) {
      best.exact_epsilon = eps;
      best_images = images;
    }
  } while (std::next_permutation(images.begin(), images.end()));

  best.witness = Permutation::from_images(std::move(best_images));
  return best;
}

}  // namespace approxsym
