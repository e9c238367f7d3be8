#pragma once

#include <vector>

namespace hhquad {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;  // positive, summing to 2
};

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence. Exact for
/// polynomials of degree <= 2n - 1.
GaussLegendreRule gauss_legendre(int n);

}  // namespace hhquad
