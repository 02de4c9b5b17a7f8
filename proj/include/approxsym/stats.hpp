#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace approxsym {

/// Matched measurements of two variants; values_a[i] and values_b[i] come
/// from the same graph instance.
struct PairedSample {
  std::string label_a;
  std::string label_b;
  std::vector<double> values_a;
  std::vector<double> values_b;
};

struct TestReport {
  double t_statistic = 0.0;
  double p_value = 1.0;  // two-sided
  std::size_t dof = 0;
  double cohens_d = 0.0;
  double mean_diff = 0.0;  // mean of (b - a)
  bool degenerate = false; // zero variance of the differences
};

/// Student-t cumulative distribution function.
inline double student_t_cdf(double t, double dof) {
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  return boost::math::cdf(boost::math::students_t_distribution<double>(dof), t);
}

inline double two_sided_p(double t, double dof) {
  if (std::isinf(t)) return 0.0;
  const boost::math::students_t_distribution<double> dist(dof);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

namespace detail {

struct DiffMoments {
  double mean = 0.0;
  double sd = 0.0;
  std::size_t k = 0;
};

inline DiffMoments paired_moments(const PairedSample& s) {
  if (s.values_a.size() != s.values_b.size()) throw std::invalid_argument("paired samples differ in length");
  const std::size_t k = s.values_a.size();
  if (k < 2) throw std::invalid_argument("paired test needs at least 2 pairs");
  double mean = 0.0;
  for (std::size_t i = 0; i < k; ++i) mean += s.values_b[i] - s.values_a[i];
  mean /= static_cast<double>(k);
  double ss = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double dev = s.values_b[i] - s.values_a[i] - mean;
    ss += dev * dev;
  }
  return {mean, std::sqrt(ss / static_cast<double>(k - 1)), k};
}

inline double signed_infinity(double x) {
  return std::copysign(std::numeric_limits<double>::infinity(), x);
}

}  // namespace detail

/// Paired-design effect size mean(b - a) / sd(b - a); negative when b is lower.
/// Zero variance gives 0 for a zero mean and a signed infinity otherwise.
inline double cohens_d(const PairedSample& s) {
  const auto m = detail::paired_moments(s);
  if (m.sd == 0.0) return m.mean == 0.0 ? 0.0 : detail::signed_infinity(m.mean);
  return m.mean / m.sd;
}

/// Two-sided paired t-test on the differences b - a.
inline TestReport paired_t_test(const PairedSample& s) {
  const auto m = detail::paired_moments(s);
  TestReport r;
  r.dof = m.k - 1;
  r.mean_diff = m.mean;
  if (m.sd == 0.0) {
    r.degenerate = true;
    if (m.mean == 0.0) {
      r.t_statistic = 0.0;
      r.p_value = 1.0;
      r.cohens_d = 0.0;
    } else {
      r.t_statistic = detail::signed_infinity(m.mean);
      r.p_value = 0.0;
      r.cohens_d = detail::signed_infinity(m.mean);
    }
    return r;
  }
  r.t_statistic = m.mean / (m.sd / std::sqrt(static_cast<double>(m.k)));
  r.p_value = two_sided_p(r.t_statistic, static_cast<double>(r.dof));
  r.cohens_d = m.mean / m.sd;
  return r;
}

}  // namespace approxsym
