#include "rangevol/moments.hpp"

#include <stdexcept>

#include "rangevol/constants.hpp"

namespace rangevol {

void MomentTable::set(const std::string& key, double value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

double MomentTable::at(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  throw std::out_of_range("moment table has no entry '" + key + "'");
}

bool MomentTable::contains(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return true;
  return false;
}

MomentTable closed_form_moments() {
  const double z3 = kZeta3;
  const double l2 = kLog2;
  MomentTable t;

  // Second moments.
  t.set("C2", 1.0);
  t.set("H2", 7.0 / 4.0);
  t.set("L2", 1.0 / 4.0);
  t.set("CH", 5.0 / 4.0);
  t.set("CL", -1.0 / 4.0);
  t.set("HL", 1.0 - 2.0 * l2);

  // Fourth moments (Gaussian kurtosis for C; the rest from the pair
  // densities and the Garman-Klass generating-function identities).
  t.set("C4", 3.0);
  t.set("H4", 93.0 / 16.0);
  t.set("L4", 3.0 / 16.0);
  t.set("CH3", 147.0 / 32.0);
  t.set("CL3", -3.0 / 32.0);
  t.set("C3H", 27.0 / 8.0);
  t.set("C3L", -3.0 / 8.0);
  t.set("C2H2", 31.0 / 8.0);
  t.set("C2L2", 1.0 / 8.0);
  t.set("H2L2", 3.0 - 4.0 * l2);
  t.set("C2HL", 2.0 - 2.0 * l2 - (7.0 / 8.0) * z3);
  t.set("H3L+HL3", 6.0 - 6.0 * l2 - (9.0 / 4.0) * z3);
  t.set("CH2L+CHL2", 9.0 / 2.0 - 4.0 * l2 - (7.0 / 4.0) * z3);

  // The one mixed fourth moment not available from the generating function.
  t.set("CHL2", z3 / 16.0 - 2.0 * l2 + 47.0 / 32.0);
  t.set("CH2L", t.at("CH2L+CHL2") - t.at("CHL2"));

  return t;
}

MomentTable delta_moments(MomentTable t) {
  const double z3 = kZeta3;
  const double l2 = kLog2;

  // delta = -L, Delta = H - C. Each entry is the stated linear combination
  // of (C, H, L) moments; where an independent closed form exists it is the
  // same expression after simplification (asserted in tests).
  t.set("d4", t.at("L4"));                       // 3/16
  t.set("Cd3", -t.at("CL3"));                    // 3/32
  t.set("C2d2", t.at("C2L2"));                   // 1/8
  t.set("C3d", -t.at("C3L"));                    // 3/8
  t.set("C2Dd", t.at("C3L") - t.at("C2HL"));     // 2 log 2 + (7/8) zeta(3) - 19/8
  t.set("CDd2", t.at("CHL2") - t.at("C2L2"));    // zeta(3)/16 - 2 log 2 + 43/32
  t.set("D2d2", t.at("H2L2") + t.at("C2L2") - 2.0 * t.at("CHL2"));  // 3/16 - zeta(3)/8
  // 2 E[D^3 d] = -(E[H3L] + E[HL3]) + E[C3L] + E[CL3] - 3 E[C2HL] + 3 E[CH2L]
  const double two_d3d = -t.at("H3L+HL3") + t.at("C3L") + t.at("CL3") -
                         3.0 * t.at("C2HL") + 3.0 * t.at("CH2L");
  t.set("D3d", 0.5 * two_d3d);  // (6 log 2 - (9/16) zeta(3) - 27/8) / 2

  // Cross-check the combinations against their independent closed forms.
  auto expect = [](double got, double want, const char* key) {
    if (std::abs(got - want) > 1e-12)
      throw std::logic_error(std::string("delta moment mismatch for ") + key);
  };
  expect(t.at("C2Dd"), 2.0 * l2 + (7.0 / 8.0) * z3 - 19.0 / 8.0, "C2Dd");
  expect(t.at("CDd2"), z3 / 16.0 - 2.0 * l2 + 43.0 / 32.0, "CDd2");
  expect(t.at("D2d2"), 3.0 / 16.0 - z3 / 8.0, "D2d2");
  expect(2.0 * t.at("D3d"), 6.0 * l2 - (9.0 / 16.0) * z3 - 27.0 / 8.0, "D3d");

  return t;
}

CovarianceMatrix4 covariance_matrix() {
  const MomentTable t = delta_moments(closed_form_moments());
  const double den = kSig4Denom;

  CovarianceMatrix4 s;
  s(0, 0) = 8.0 * (t.at("d4") + t.at("D2d2")) - 1.0;
  s(1, 1) = t.at("C4") - 1.0;
  s(2, 2) = 8.0 * (t.at("C2d2") + t.at("C2Dd")) - 1.0;
  s(3, 3) = t.at("D2d2") / (den * den) - 1.0;

  s(0, 1) = 4.0 * t.at("C2d2") - 1.0;
  s(0, 2) = 8.0 * t.at("Cd3") + 8.0 * t.at("CDd2") - 1.0;
  // (delta, Delta) are exchangeable, so E[D d^3] = E[D^3 d] and
  // E[C D^2 d] = E[C D d^2].
  s(0, 3) = 4.0 * t.at("D3d") / den - 1.0;
  s(1, 2) = 4.0 * t.at("C3d") - 1.0;
  s(1, 3) = t.at("C2Dd") / den - 1.0;
  s(2, 3) = 4.0 * t.at("CDd2") / den - 1.0;

  s(1, 0) = s(0, 1);
  s(2, 0) = s(0, 2);
  s(3, 0) = s(0, 3);
  s(2, 1) = s(1, 2);
  s(3, 1) = s(1, 3);
  s(3, 2) = s(2, 3);
  return s;
}

double seshadri_correlation() { return 1.0 + 3.5 * kZeta3 - 8.0 * kLog2; }

std::vector<double> leading_principal_minors(const Eigen::MatrixXd& m) {
  std::vector<double> minors;
  minors.reserve(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 1; k <= m.rows(); ++k)
    minors.push_back(m.topLeftCorner(k, k).determinant());
  return minors;
}

}  // namespace rangevol
