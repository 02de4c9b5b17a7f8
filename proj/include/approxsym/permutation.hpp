#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "approxsym/graph.hpp"
#include "approxsym/rng.hpp"

namespace approxsym {

/// Bijection on {0..n-1}, stored together with its inverse.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.forward_.resize(n);
    std::iota(p.forward_.begin(), p.forward_.end(), Vertex{0});
    p.inverse_ = p.forward_;
    return p;
  }

  /// Validates that images is a bijection.
  static Permutation from_images(std::vector<Vertex> images) {
    const std::size_t n = images.size();
    std::vector<Vertex> inv(n, 0);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = images[i];
      if (v >= n || seen[v]) throw std::invalid_argument("images do not form a permutation");
      seen[v] = true;
      inv[v] = static_cast<Vertex>(i);
    }
    Permutation p;
    p.forward_ = std::move(images);
    p.inverse_ = std::move(inv);
    return p;
  }

  /// Uniformly random permutation (Fisher-Yates on the portable RNG).
  static Permutation random(std::size_t n, Rng& rng) {
    std::vector<Vertex> images(n);
    std::iota(images.begin(), images.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
    return from_images(std::move(images));
  }

  /// Uniformly random derangement by rejection; a shuffle is abandoned as soon
  /// as a finalized position turns out to be fixed. Requires n >= 2.
  static Permutation random_derangement(std::size_t n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("no derangement exists for n < 2");
    std::vector<Vertex> images(n);
    for (;;) {
      std::iota(images.begin(), images.end(), Vertex{0});
      bool ok = true;
      for (std::size_t i = n; i > 1 && ok; --i) {
        std::swap(images[i - 1], images[rng.below(i)]);
        ok = images[i - 1] != i - 1;
      }
      if (ok && images[0] != 0) return from_images(std::move(images));
    }
  }

  std::size_t size() const noexcept { return forward_.size(); }

  Vertex operator()(Vertex v) const noexcept { return forward_[v]; }
  Vertex image(Vertex v) const noexcept { return forward_[v]; }
  Vertex preimage(Vertex v) const noexcept { return inverse_[v]; }

  std::span<const Vertex> forward() const noexcept { return forward_; }
  std::span<const Vertex> inverse_images() const noexcept { return inverse_; }

  Permutation inverse() const {
    Permutation p;
    p.forward_ = inverse_;
    p.inverse_ = forward_;
    return p;
  }

  std::size_t fixed_points() const noexcept {
    std::size_t count = 0;
    for (std::size_t i = 0; i < forward_.size(); ++i) count += forward_[i] == i;
    return count;
  }

  bool is_identity() const noexcept { return fixed_points() == size(); }

  /// In-place transposition of images: a -> pi(b), b -> pi(a).
  void swap_images(Vertex a, Vertex b) noexcept {
    std::swap(forward_[a], forward_[b]);
    inverse_[forward_[a]] = a;
    inverse_[forward_[b]] = b;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.forward_ == b.forward_;
  }

 private:
  std::vector<Vertex> forward_;
  std::vector<Vertex> inverse_;
};

/// Returns p with the images of a and b exchanged.
inline Permutation apply_transposition(Permutation p, Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("transposition requires distinct vertices");
  if (a >= p.size() || b >= p.size()) throw std::out_of_range("transposition vertex out of range");
  p.swap_images(a, b);
  return p;
}

}  // namespace approxsym
