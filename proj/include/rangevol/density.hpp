#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rangevol {

/// Truncation control for the Siegmund series: terms with |j| <= max_abs_j
/// are summed; tail_bound reports a rigorous bound on everything dropped
/// (Gaussian decay) after each evaluation.
struct SeriesTruncation {
  int max_abs_j = 16;
  double tail_bound = 0.0;
};

/// Siegmund's corridor density: Q(xi, a, b) dxi is the probability that a
/// standard BM stays inside (a, b) on [0, 1] and ends in (xi, xi + dxi).
/// Q(xi,a,b) = sum_j { phi(xi - 2j(b-a)) - phi(xi - 2a - 2j(b-a)) }.
/// Domain: a < min(xi, 0) and max(xi, 0) < b.
double siegmund_q(double xi, double a, double b, SeriesTruncation& trunc);

/// Joint density of the raw spreads (c, h, l) at (xi, a, b): minus the mixed
/// second a,b-derivative of Q, taken term by term in closed form
/// (each term is a Gaussian). Domain: xi in (a, b), a < 0 < b.
double joint_density_chl(double xi, double a, double b, SeriesTruncation& trunc);

/// Joint density of the flipped spreads (C, H, L) at (xi, a, b):
/// 2 * joint_density_chl restricted to xi in (0, b).
double joint_density_s2(double xi, double a, double b, SeriesTruncation& trunc);

/// Closed-form pair densities, Eqs. over (H,C) and (L,C):
/// f_{H,C}(x, y) = 4 (2x - y) phi(2x - y) on 0 < y < x.
double pair_density_hc(double x, double y);
/// f_{L,C}(z, y) = 4 (y - 2z) phi(y - 2z) on z < 0 < y.
double pair_density_lc(double z, double y);

/// log of the (c,h,l) density under variance parameter theta, via the scale
/// family f_theta(x) = theta^(-3/2) f_1(x / sqrt(theta)).
double log_density_chl_theta(double xi, double a, double b, double theta,
                             SeriesTruncation& trunc);

/// Score d/dtheta log f_theta by central finite difference with step h.
double score_chl(double xi, double a, double b, double theta, double h,
                 SeriesTruncation& trunc);

struct FisherResult {
  double information = 0.0;       // per window, for theta = sigma^2 at sigma = 1
  double cr_bound = 0.0;          // 1 / information
  double efficiency_bound = 0.0;  // 2 * information
};

enum class FisherMethod { kQuadrature, kMonteCarlo };

/// Fisher information of the (C,H,L) law for theta = sigma^2 at theta = 1.
/// Quadrature: tensor Gauss-Legendre with `resolution` panels per dimension;
/// the result is recomputed at 2x resolution and the two must agree to
/// `refine_tol` relative (throws "resolution too coarse" otherwise). The
/// score uses central differences at steps h and h/2, which must agree to
/// 1e-5 relative. Monte Carlo: `resolution` is the triple count from the
/// fine chained sampler; half- and full-sample estimates must be compatible.
FisherResult fisher_information(FisherMethod method, std::int64_t resolution,
                                double refine_tol = 1e-3);

struct ExpDiagnostic {
  double r_squared = 0.0;
  double max_residual = 0.0;
  std::size_t grid_points = 0;
};

/// Affine-relation test between score(theta2) and score(theta1) over a grid
/// of (xi, a, b) points: in an exponential family the fit would be exact.
/// Requires theta1 != theta2, both positive, and >= 3 distinct grid points.
ExpDiagnostic exponentiality_diagnostic(double theta1, double theta2,
                                        std::span<const std::array<double, 3>> grid);

/// Deterministic default grid (per_axis^3 points) over the S2 domain.
std::vector<std::array<double, 3>> default_score_grid(int per_axis);

/// Control: the same diagnostic for the one-parameter scale family of C
/// alone (half-normal), which is exponential, so r_squared = 1.
ExpDiagnostic exponentiality_control_scale_normal(double theta1, double theta2,
                                                  int grid_points);

}  // namespace rangevol
