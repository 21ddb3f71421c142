#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rangevol {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence.
struct GaussLegendre {
  std::vector<double> nodes, weights;

  explicit GaussLegendre(int order) {
    if (order < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
    nodes.resize(order);
    weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = order * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      nodes[i] = -x;
      nodes[order - 1 - i] = x;
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      weights[i] = w;
      weights[order - 1 - i] = w;
    }
  }
};

/// Composite Gauss-Legendre over [a, b] with equal panels.
template <class F>
double integrate_panels(F&& f, double a, double b, int panels, const GaussLegendre& gl) {
  const double hw = (b - a) / (2.0 * panels);
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (2.0 * p + 1.0) * hw;
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
      acc += gl.weights[i] * f(mid + hw * gl.nodes[i]);
    total += acc * hw;
  }
  return total;
}

}  // namespace rangevol
