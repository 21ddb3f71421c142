#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace rangevol {

/// Neumaier-compensated accumulator. Adding is order-dependent but exact to
/// ~1 ulp of the running sum, which keeps 1e7-term reductions honest.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  void merge(const KahanSum& o) {
    add(o.sum);
    comp += o.comp;
  }
  double value() const { return sum + comp; }
};

/// Pairwise (cascade) sum of a span; deterministic for a given ordering.
inline double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= 32) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

inline double pairwise_mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sequence");
  return pairwise_sum(xs) / static_cast<double>(xs.size());
}

/// Accumulates sum x, x^2, x^3, x^4 with compensation; enough to report a
/// mean and variance together with their Monte Carlo standard errors.
struct MomentAccumulator {
  KahanSum s1, s2, s3, s4;
  std::size_t n = 0;

  void add(double x) {
    const double x2 = x * x;
    s1.add(x);
    s2.add(x2);
    s3.add(x2 * x);
    s4.add(x2 * x2);
    ++n;
  }
  void merge(const MomentAccumulator& o) {
    s1.merge(o.s1);
    s2.merge(o.s2);
    s3.merge(o.s3);
    s4.merge(o.s4);
    n += o.n;
  }

  double mean() const { return s1.value() / static_cast<double>(n); }
  /// Population-style variance (divides by n; bias is irrelevant at MC sizes).
  double variance() const {
    const double m = mean();
    return s2.value() / static_cast<double>(n) - m * m;
  }
  /// Standard error of the mean.
  double se_mean() const { return std::sqrt(variance() / static_cast<double>(n)); }
  /// Central fourth moment.
  double central4() const {
    const double nn = static_cast<double>(n);
    const double m = mean();
    const double m2 = s2.value() / nn, m3 = s3.value() / nn, m4 = s4.value() / nn;
    return m4 - 4.0 * m * m3 + 6.0 * m * m * m2 - 3.0 * m * m * m * m;
  }
  /// Standard error of the sample variance: sqrt((mu4 - var^2)/n).
  double se_variance() const {
    const double v = variance();
    return std::sqrt(std::max(0.0, central4() - v * v) / static_cast<double>(n));
  }
};

/// Mean/covariance tracker for a pair of streams (correlation tests).
struct CorrAccumulator {
  KahanSum sx, sy, sxx, syy, sxy;
  std::size_t n = 0;

  void add(double x, double y) {
    sx.add(x);
    sy.add(y);
    sxx.add(x * x);
    syy.add(y * y);
    sxy.add(x * y);
    ++n;
  }
  void merge(const CorrAccumulator& o) {
    sx.merge(o.sx);
    sy.merge(o.sy);
    sxx.merge(o.sxx);
    syy.merge(o.syy);
    sxy.merge(o.sxy);
    n += o.n;
  }
  double correlation() const {
    const double nn = static_cast<double>(n);
    const double mx = sx.value() / nn, my = sy.value() / nn;
    const double vx = sxx.value() / nn - mx * mx;
    const double vy = syy.value() / nn - my * my;
    const double cxy = sxy.value() / nn - mx * my;
    return cxy / std::sqrt(vx * vy);
  }
  /// Large-sample standard error of the sample correlation.
  double se_correlation() const {
    const double r = correlation();
    return (1.0 - r * r) / std::sqrt(static_cast<double>(n));
  }
};

/// One-sample Kolmogorov-Smirnov statistic against a cdf given as a callable.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf&& cdf) {
  if (xs.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                             f - static_cast<double>(i) / n));
  }
  return d;
}

/// Asymptotic one-sample KS critical value: c(alpha)/sqrt(n),
/// c(alpha) = sqrt(-ln(alpha/2)/2). c(0.01) = 1.6276.
inline double ks_critical_value(std::size_t n, double alpha) {
  return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(static_cast<double>(n));
}

}  // namespace rangevol
