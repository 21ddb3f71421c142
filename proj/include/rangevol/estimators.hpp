#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "rangevol/candle.hpp"
#include "rangevol/constants.hpp"

namespace rangevol {

/// The four basic quadratic unbiased variance estimators of one window:
///   sig1 = 2[(H-C)^2 + L^2]
///   sig2 = C^2
///   sig3 = 2(H-C-L)C
///   sig4 = -(H-C)L / (2 log 2 - 5/4)
/// Each has expectation sigma^2 for a zero-drift BM window; each is >= 0.
struct EstimatorBasis {
  double sig1 = 0.0;
  double sig2 = 0.0;
  double sig3 = 0.0;
  double sig4 = 0.0;

  double operator[](int i) const {
    return i == 0 ? sig1 : i == 1 ? sig2 : i == 2 ? sig3 : sig4;
  }
};

struct WeightVector4 {
  std::array<double, 4> a{};

  double sum() const { return a[0] + a[1] + a[2] + a[3]; }
};

/// The minimum-variance weights alpha of the proposed estimator, as published
/// (6 decimals). solve_optimal_weights recomputes them to full precision from
/// the closed-form covariance matrix; the recomputed values round to these.
inline constexpr WeightVector4 kProposedWeights{{0.273520, 0.160358, 0.365212, 0.200910}};

EstimatorBasis basic_estimators(const SpreadsS2& s2);

/// Weighted combination of the basic estimators. Weights must sum to 1
/// within 1e-12 (unbiasedness); rejects otherwise.
double proposed_estimator(const SpreadsS2& s2, const WeightVector4& weights = kProposedWeights);

/// Garman-Klass: 0.511 (h-l)^2 - 0.019 (c(h+l) - 2hl) - 0.383 c^2.
double garman_klass(const SpreadsS1& s1);

/// Garman-Klass rewritten over the basic estimators, sum beta_i sig_i with
/// beta = (0.2555, 0.1090, 0.5015, 2(0.511-0.019)(2 log 2 - 5/4)).
/// Identical to garman_klass(s1) with s2 = flip(s1).
double garman_klass_beta_form(const SpreadsS2& s2);

inline std::array<double, 4> garman_klass_betas() {
  return {0.511 / 2.0, 0.511 - 0.383 - 0.019, 0.511 - 0.019 / 2.0,
          2.0 * (0.511 - 0.019) * kSig4Denom};
}

/// The classical estimator (CLOSE-OPEN)^2.
inline double classical_estimator(const SpreadsS1& s1) { return s1.c * s1.c; }

/// Average of the (C,H)- and (C,L)-based MLEs, (1/3)(2H-C)^2 and
/// (1/3)(2L-C)^2; equals (sig1 + sig2 + sig3)/3.
double pairwise_mle_estimator(const SpreadsS2& s2);

enum class EstimatorId {
  kClassical,
  kGarmanKlass,
  kProposed,
  kBasis1,
  kBasis2,
  kBasis3,
  kBasis4,
  kPairwiseMle,
};

EstimatorId estimator_from_string(const std::string& name);
std::string estimator_to_string(EstimatorId id);

struct SeriesEstimate {
  double mean = 0.0;
  std::vector<double> per_window;
};

/// Applies the chosen per-window estimator to every candle and reports the
/// per-window values and their mean (pairwise reduction). Rejects empty
/// input; invalid candles are reported with their window index.
SeriesEstimate estimate_series(std::span<const Candle> windows, EstimatorId method);

}  // namespace rangevol
