#pragma once

#include <vector>

#include "hhquad/expr.hpp"

namespace hhquad {

/// Taylor polynomial data of degree r-1 about x0:
/// poly_coeffs[k] = f^(k)(x0)/k! for k = 0..r-1.
struct TaylorExpansion {
  double x0 = 0.0;
  int order_r = 1;
  std::vector<double> poly_coeffs;

  /// Horner evaluation of the degree r-1 polynomial at x.
  double evaluate(double x) const;
};

/// Expands f about x0 with r coefficients (degree r-1).
TaylorExpansion taylor_expand(const Expr& f, double x0, int r);

/// T_{r-1}(f, x0, x): the Taylor polynomial of degree r-1 evaluated at x.
double taylor_polynomial(const Expr& f, double x0, int r, double x);

/// Which algebraic route evaluates the remainder integral. Both compute the
/// same number; the shifted form substitutes u = x - x0 and integrates from
/// 0. Exposed so tests can pin their agreement.
enum class RemainderForm { kDirect, kShifted };

inline constexpr int kDefaultRemainderGaussOrder = 24;

/// R_{r-1}(f, x0, x) = integral from x0 to x of
/// (x - t)^(r-1) f^(r)(t) / (r-1)! dt, evaluated by Gauss-Legendre
/// quadrature of `gl_order` points on the oriented segment (so the identity
/// f(x) = T_{r-1} + R_{r-1} holds for x on either side of x0).
double taylor_remainder(const Expr& f, double x0, int r, double x,
                        int gl_order = kDefaultRemainderGaussOrder,
                        RemainderForm form = RemainderForm::kDirect);

}  // namespace hhquad
