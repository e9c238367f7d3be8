#include "hhquad/gauss_legendre.hpp"

#include <cmath>

#include "hhquad/errors.hpp"

namespace hhquad {

namespace {

// Legendre P_n(x) and P_n'(x) via the three-term recurrence.
void legendre(int n, double x, double* p, double* dp) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = pk;
  }
  *p = p1;
  *dp = n * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw ConfigError("Gauss-Legendre order must be at least 1");
  }
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }

  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-based initial guess for the i-th root in (0, 1].
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p = 0.0;
    double dp = 1.0;
    for (int iter = 0; iter < 64; ++iter) {
      legendre(n, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    legendre(n, x, &p, &dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
    double p = 0.0;
    double dp = 1.0;
    legendre(n, 0.0, &p, &dp);
    rule.weights[n / 2] = 2.0 / (dp * dp);
  }
  return rule;
}

}  // namespace hhquad
