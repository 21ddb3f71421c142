#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace rangevol {

/// Closed-form moments of the flipped spreads (C, H, L) of a standard BM
/// window (sigma = 1), keyed by a stable string set:
///
///   second moments:  C2 H2 L2 CH CL HL
///   fourth moments:  C4 H4 L4 CH3 CL3 C3H C3L C2H2 C2L2 H2L2 C2HL
///                    H3L+HL3 CH2L+CHL2 CHL2 CH2L
///   (delta, Delta) reparametrization (d = -L, D = H - C), added by
///   delta_moments(): d4 Cd3 C2d2 C3d C2Dd CDd2 D2d2 D3d
///
/// "CHL2" carries the zeta(3)/16 - 2 log 2 + 47/32 value; "CH2L" is backed
/// out of the published sum. E[H3L] and E[HL3] individually are not exposed
/// (only their sum is known in closed form).
class MomentTable {
 public:
  void set(const std::string& key, double value);
  double at(const std::string& key) const;
  bool contains(const std::string& key) const;
  const std::vector<std::pair<std::string, double>>& entries() const { return entries_; }

 private:
  std::vector<std::pair<std::string, double>> entries_;
};

/// All closed-form (C, H, L) moments at sigma = 1.
MomentTable closed_form_moments();

/// Augments a base table with the (delta, Delta) moments, each computed as
/// its linear combination of (C, H, L) moments.
MomentTable delta_moments(MomentTable table);

using CovarianceMatrix4 = Eigen::Matrix4d;

/// The exact 4x4 covariance matrix of the four basic estimators, assembled
/// from the moment table. Symmetric positive definite.
CovarianceMatrix4 covariance_matrix();

/// Correlation of 2H(H-C) and 2L(L-C): 1 + (7/2) zeta(3) - 8 log 2.
double seshadri_correlation();

/// Leading principal minors, the positive-definiteness certificate used in
/// tests (all > 0 iff SPD for a symmetric matrix).
std::vector<double> leading_principal_minors(const Eigen::MatrixXd& m);

}  // namespace rangevol
