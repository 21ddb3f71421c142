#include "rangevol/oracle.hpp"

#include <cmath>

#include "rangevol/constants.hpp"
#include "rangevol/estimators.hpp"
#include "rangevol/moments.hpp"
#include "rangevol/rng.hpp"
#include "rangevol/simulate.hpp"
#include "rangevol/weights.hpp"

namespace rangevol {

const std::array<const char*, MomentOracleAccum::kCount>& MomentOracleAccum::keys() {
  static const std::array<const char*, kCount> k = {
      "C2",   "H2",   "L2",   "CH",        "CL",        "HL",   "C4",   "H4",
      "L4",   "CH3",  "CL3",  "C3H",       "C3L",       "C2H2", "C2L2", "H2L2",
      "C2HL", "H3L+HL3", "CH2L+CHL2", "CHL2", "CH2L", "d4", "Cd3", "C2d2",
      "C3d",  "C2Dd", "CDd2", "D2d2",      "D3d"};
  return k;
}

void MomentOracleAccum::add(const SpreadsS2& s) {
  const double C = s.C, H = s.H, L = s.L;
  const double D = H - C, d = -L;
  const double C2 = C * C, H2 = H * H, L2 = L * L;
  const double CH = C * H, CL = C * L, HL = H * L;
  const double D2 = D * D, d2 = d * d;

  const std::array<double, kCount> v = {
      C2,
      H2,
      L2,
      CH,
      CL,
      HL,
      C2 * C2,
      H2 * H2,
      L2 * L2,
      CH * H2,
      CL * L2,
      C2 * CH,
      C2 * CL,
      C2 * H2,
      C2 * L2,
      H2 * L2,
      C2 * HL,
      HL * (H2 + L2),
      C * HL * (H + L),
      CH * L2,
      CL * H2,
      d2 * d2,
      C * d * d2,
      C2 * d2,
      C2 * C * d,
      C2 * D * d,
      C * D * d2,
      D2 * d2,
      D2 * D * d,
  };
  for (int i = 0; i < kCount; ++i) {
    sum_[i].add(v[i]);
    sumsq_[i].add(v[i] * v[i]);
  }
  ++n_;
}

void MomentOracleAccum::merge(const MomentOracleAccum& o) {
  for (int i = 0; i < kCount; ++i) {
    sum_[i].merge(o.sum_[i]);
    sumsq_[i].merge(o.sumsq_[i]);
  }
  n_ += o.n_;
}

void EstimatorVarAccum::add(const SpreadsS2& s) {
  const EstimatorBasis b = basic_estimators(s);
  for (int i = 0; i < 4; ++i) basis[i].add(b[i]);
  classical.add(b.sig2);  // C^2 == (close-open)^2
  pairwise.add((b.sig1 + b.sig2 + b.sig3) / 3.0);
  gk.add(garman_klass_beta_form(s));
  proposed.add(proposed_estimator(s));
}

void WindowEnsembleStats::add(const SpreadsS2& s) {
  moments.add(s);
  estimators.add(s);
  ++windows;
}

namespace {

// Hot loop: standard-BM window from a lattice of `steps` increments,
// flipped. Kept here so draw_normal() inlines.
SpreadsS2 lattice_bm_window(std::uint64_t seed, std::uint64_t index, int steps,
                            double step_sd) {
  Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, index);
  double level = 0.0, hi = 0.0, lo = 0.0;
  for (int i = 0; i < steps; ++i) {
    level += step_sd * draw_normal(rng);
    if (level > hi) hi = level;
    if (level < lo) lo = level;
  }
  return flip(SpreadsS1{level, hi, lo});
}

}  // namespace

WindowEnsembleStats run_lattice_bm_ensemble(std::size_t windows, int steps,
                                            std::uint64_t seed) {
  const double sd = 1.0 / std::sqrt(static_cast<double>(steps));
  WindowEnsembleStats stats;
  for (std::size_t i = 0; i < windows; ++i)
    stats.add(lattice_bm_window(seed, i, steps, sd));
  return stats;
}

WindowEnsembleStats run_chained_exact_ensemble(std::size_t windows, int subintervals,
                                               std::uint64_t seed) {
  WindowEnsembleStats stats;
  for (std::size_t i = 0; i < windows; ++i) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, i);
    stats.add(draw_chl_approx(rng, subintervals, ChlCopula::kAntitheticDefault));
  }
  return stats;
}

RichardsonValue richardson(double fine, double se_fine, double coarse, double se_coarse) {
  return RichardsonValue{2.0 * fine - coarse,
                         std::sqrt(4.0 * se_fine * se_fine + se_coarse * se_coarse)};
}

OracleCheck make_check(std::string name, double expected, double estimate,
                       double tolerance) {
  OracleCheck c;
  c.name = std::move(name);
  c.expected = expected;
  c.estimate = estimate;
  c.tolerance = tolerance;
  c.pass = std::abs(estimate - expected) <= tolerance;
  return c;
}

BmOracleEnsembles run_bm_oracle_ensembles(std::size_t fine_windows, int fine_steps,
                                          std::size_t coarse_windows,
                                          std::uint64_t seed) {
  BmOracleEnsembles e;
  e.fine_steps = fine_steps;
  e.coarse_steps = fine_steps / 4;
  e.fine = run_lattice_bm_ensemble(fine_windows, e.fine_steps, seed);
  e.coarse = run_lattice_bm_ensemble(coarse_windows, e.coarse_steps, seed + 1);
  return e;
}

std::vector<OracleCheck> moment_oracle_checks(const BmOracleEnsembles& e, double n_se) {
  const MomentTable table = delta_moments(closed_form_moments());
  std::vector<OracleCheck> checks;
  const auto& keys = MomentOracleAccum::keys();
  for (int i = 0; i < MomentOracleAccum::kCount; ++i) {
    const RichardsonValue rv =
        richardson(e.fine.moments.mean(i), e.fine.moments.se(i),
                   e.coarse.moments.mean(i), e.coarse.moments.se(i));
    checks.push_back(make_check(std::string("E[") + keys[i] + "]", table.at(keys[i]),
                                rv.value, n_se * rv.se));
  }
  return checks;
}

std::vector<OracleCheck> estimator_variance_checks(const BmOracleEnsembles& e,
                                                   double n_se) {
  const CovarianceMatrix4 sigma = covariance_matrix();
  const Eigen::Vector4d third(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0);
  const double pairwise_var = third.transpose() * sigma * third;
  const double proposed_var = solve_optimal_weights(sigma).variance;

  auto var_check = [&](const char* name, double expected,
                       const MomentAccumulator& fine,
                       const MomentAccumulator& coarse) {
    const RichardsonValue rv = richardson(fine.variance(), fine.se_variance(),
                                          coarse.variance(), coarse.se_variance());
    return make_check(name, expected, rv.value, n_se * rv.se);
  };

  std::vector<OracleCheck> checks;
  checks.push_back(var_check("Var(classical)", 2.0, e.fine.estimators.classical,
                             e.coarse.estimators.classical));
  checks.push_back(var_check("Var(pairwise-mle)", pairwise_var,
                             e.fine.estimators.pairwise, e.coarse.estimators.pairwise));
  checks.push_back(
      var_check("Var(gk)", 0.27, e.fine.estimators.gk, e.coarse.estimators.gk));
  checks.push_back(var_check("Var(proposed)", proposed_var, e.fine.estimators.proposed,
                             e.coarse.estimators.proposed));

  // Strict ordering on the extrapolated variances.
  const double v_prop = richardson(e.fine.estimators.proposed.variance(),
                                   e.fine.estimators.proposed.se_variance(),
                                   e.coarse.estimators.proposed.variance(),
                                   e.coarse.estimators.proposed.se_variance())
                            .value;
  const double v_gk =
      richardson(e.fine.estimators.gk.variance(), e.fine.estimators.gk.se_variance(),
                 e.coarse.estimators.gk.variance(), e.coarse.estimators.gk.se_variance())
          .value;
  OracleCheck order;
  order.name = "Var(proposed) < Var(gk)";
  order.expected = 1.0;
  order.estimate = v_prop < v_gk ? 1.0 : 0.0;
  order.tolerance = 0.0;
  order.pass = v_prop < v_gk;
  checks.push_back(order);
  return checks;
}

SeshadriRun run_seshadri_ensemble(std::size_t windows, int subintervals,
                                  std::uint64_t seed) {
  SeshadriRun run;
  run.th.reserve(windows);
  for (std::size_t i = 0; i < windows; ++i) {
    Xoshiro256pp rng = Xoshiro256pp::for_stream(seed, i);
    const SpreadsS2 s = draw_chl_approx(rng, subintervals, ChlCopula::kAntitheticDefault);
    const double th = 2.0 * s.H * (s.H - s.C);
    const double tl = 2.0 * s.L * (s.L - s.C);
    run.th.push_back(th);
    run.th_c.add(th, s.C);
    run.th_tl.add(th, tl);
  }
  return run;
}

std::vector<OracleCheck> seshadri_checks(std::size_t windows, int subintervals,
                                         std::uint64_t seed, double n_se) {
  SeshadriRun run = run_seshadri_ensemble(windows, subintervals, seed);
  const std::size_t n = run.th.size();

  std::vector<OracleCheck> checks;
  const double d = ks_statistic(std::move(run.th),
                                [](double t) { return -std::expm1(-t); });
  checks.push_back(make_check("KS 2H(H-C) vs Exp(1), 1% level", 0.0, d,
                              ks_critical_value(n, 0.01)));
  checks.push_back(make_check("corr(2H(H-C), C)", 0.0, run.th_c.correlation(),
                              n_se * run.th_c.se_correlation()));
  checks.push_back(make_check("corr(2H(H-C), 2L(L-C))", seshadri_correlation(),
                              run.th_tl.correlation(),
                              n_se * run.th_tl.se_correlation()));
  return checks;
}

std::vector<OracleCheck> closed_form_checks() {
  const CovarianceMatrix4 sigma = covariance_matrix();
  std::vector<OracleCheck> checks;

  const double diag[4] = {0.797943, 2.0, 0.504753, 1.004876};
  for (int i = 0; i < 4; ++i)
    checks.push_back(make_check("Sigma(" + std::to_string(i + 1) + "," +
                                    std::to_string(i + 1) + ")",
                                diag[i], sigma(i, i), 1e-5));
  const double off[6] = {-0.5, 0.010674, 0.580786, 0.5, -0.537074, -0.043711};
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      checks.push_back(make_check("Sigma(" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")",
                                  off[k++], sigma(i, j), 1e-5));

  const OptimalWeightsResult w = solve_optimal_weights(sigma);
  for (int i = 0; i < 4; ++i)
    checks.push_back(make_check("alpha_" + std::to_string(i + 1),
                                kProposedWeights.a[i], w.weights[i], 1e-5));
  checks.push_back(make_check("Var(proposed) closed form", 0.258658, w.variance, 1e-5));
  checks.push_back(make_check("efficiency", 7.73221, w.efficiency, 1e-5));

  const auto beta = garman_klass_betas();
  const Eigen::Vector4d bv(beta[0], beta[1], beta[2], beta[3]);
  const double gk_var = bv.transpose() * sigma * bv;
  checks.push_back(make_check("beta' Sigma beta (GK variance)", 0.27, gk_var, 0.002));
  return checks;
}

}  // namespace rangevol
