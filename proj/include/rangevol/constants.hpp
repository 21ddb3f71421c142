#pragma once

#include <cmath>
#include <stdexcept>

namespace rangevol {

// Constants shared by the moment tables, estimators and densities.
// zeta(3) is Apery's constant, sum 1/k^3.
inline constexpr double kLog2 = 0.69314718055994530941;
inline constexpr double kZeta3 = 1.20205690315959428540;

// Denominator of the fourth basic estimator, 2*log(2) - 5/4.
inline constexpr double kSig4Denom = 2.0 * kLog2 - 1.25;

inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

/// Standard normal pdf.
inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

/// Standard normal cdf.
inline double norm_cdf(double x) { return 0.5 * std::erfc(-x * 0.70710678118654752440); }

/// Upper tail of the standard normal, 1 - cdf(x).
inline double norm_sf(double x) { return 0.5 * std::erfc(x * 0.70710678118654752440); }

/// zeta(3) by direct series summation with Neumaier compensation, stopping
/// once the term drops below `term_tol`. The dropped tail is restored with the
/// Euler-Maclaurin remainder (without it, truncation alone leaves ~1e-11).
/// Used to cross-check the frozen constant; the two must agree to 1e-14.
inline double zeta3_by_series(double term_tol = 1e-16) {
  double sum = 0.0, comp = 0.0;
  std::uint64_t k = 1;
  for (;; ++k) {
    const double kd = static_cast<double>(k);
    const double term = 1.0 / (kd * kd * kd);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term))
      comp += (sum - t) + term;
    else
      comp += (term - t) + sum;
    sum = t;
    if (term < term_tol) break;
    if (k > 200'000'000ULL) throw std::runtime_error("zeta3 series failed to terminate");
  }
  const double m = static_cast<double>(k + 1);
  const double tail = 1.0 / (2.0 * m * m) + 1.0 / (2.0 * m * m * m) + 1.0 / (4.0 * m * m * m * m);
  return sum + comp + tail;
}

}  // namespace rangevol
