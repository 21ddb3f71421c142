#include "rangevol/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "rangevol/stats.hpp"

namespace rangevol {

EstimatorBasis basic_estimators(const SpreadsS2& s2) {
  const double dH = s2.H - s2.C;
  return EstimatorBasis{
      2.0 * (dH * dH + s2.L * s2.L),
      s2.C * s2.C,
      2.0 * (dH - s2.L) * s2.C,
      -(dH * s2.L) / kSig4Denom,
  };
}

double proposed_estimator(const SpreadsS2& s2, const WeightVector4& weights) {
  if (std::abs(weights.sum() - 1.0) > 1e-12)
    throw std::invalid_argument("proposed_estimator: weights must sum to 1 (got " +
                                std::to_string(weights.sum()) + ")");
  const EstimatorBasis b = basic_estimators(s2);
  return weights.a[0] * b.sig1 + weights.a[1] * b.sig2 + weights.a[2] * b.sig3 +
         weights.a[3] * b.sig4;
}

double garman_klass(const SpreadsS1& s1) {
  const double hl = s1.h - s1.l;
  return 0.511 * hl * hl - 0.019 * (s1.c * (s1.h + s1.l) - 2.0 * s1.h * s1.l) -
         0.383 * s1.c * s1.c;
}

double garman_klass_beta_form(const SpreadsS2& s2) {
  const auto beta = garman_klass_betas();
  const EstimatorBasis b = basic_estimators(s2);
  return beta[0] * b.sig1 + beta[1] * b.sig2 + beta[2] * b.sig3 + beta[3] * b.sig4;
}

double pairwise_mle_estimator(const SpreadsS2& s2) {
  const double a = 2.0 * s2.H - s2.C;
  const double b = 2.0 * s2.L - s2.C;
  return (a * a + b * b) / 6.0;
}

EstimatorId estimator_from_string(const std::string& name) {
  if (name == "classical") return EstimatorId::kClassical;
  if (name == "gk") return EstimatorId::kGarmanKlass;
  if (name == "proposed") return EstimatorId::kProposed;
  if (name == "basis1") return EstimatorId::kBasis1;
  if (name == "basis2") return EstimatorId::kBasis2;
  if (name == "basis3") return EstimatorId::kBasis3;
  if (name == "basis4") return EstimatorId::kBasis4;
  if (name == "pairwise-mle") return EstimatorId::kPairwiseMle;
  throw std::invalid_argument(
      "unknown estimator '" + name +
      "' (expected classical|gk|proposed|basis1..basis4|pairwise-mle)");
}

std::string estimator_to_string(EstimatorId id) {
  switch (id) {
    case EstimatorId::kClassical: return "classical";
    case EstimatorId::kGarmanKlass: return "gk";
    case EstimatorId::kProposed: return "proposed";
    case EstimatorId::kBasis1: return "basis1";
    case EstimatorId::kBasis2: return "basis2";
    case EstimatorId::kBasis3: return "basis3";
    case EstimatorId::kBasis4: return "basis4";
    case EstimatorId::kPairwiseMle: return "pairwise-mle";
  }
  throw std::logic_error("unreachable estimator id");
}

double estimate_window(const SpreadsS1& s1, EstimatorId method) {
  switch (method) {
    case EstimatorId::kClassical: return classical_estimator(s1);
    case EstimatorId::kGarmanKlass: return garman_klass(s1);
    default: break;
  }
  const SpreadsS2 s2 = flip(s1);
  switch (method) {
    case EstimatorId::kProposed: return proposed_estimator(s2);
    case EstimatorId::kBasis1: return basic_estimators(s2).sig1;
    case EstimatorId::kBasis2: return basic_estimators(s2).sig2;
    case EstimatorId::kBasis3: return basic_estimators(s2).sig3;
    case EstimatorId::kBasis4: return basic_estimators(s2).sig4;
    case EstimatorId::kPairwiseMle: return pairwise_mle_estimator(s2);
    default: throw std::logic_error("unreachable estimator id");
  }
}

SeriesEstimate estimate_series(std::span<const Candle> windows, EstimatorId method) {
  if (windows.empty()) throw std::invalid_argument("estimate_series: no windows");
  SeriesEstimate out;
  out.per_window.resize(windows.size());
  for (std::size_t i = 0; i < windows.size(); ++i) {
    SpreadsS1 s1;
    try {
      s1 = spreads_from_candle(windows[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("window " + std::to_string(i) + ": " + e.what());
    }
    out.per_window[i] = estimate_window(s1, method);
  }
  out.mean = pairwise_mean(out.per_window);
  return out;
}

}  // namespace rangevol
