#include "hhquad/taylor.hpp"

#include <cmath>

#include "hhquad/errors.hpp"
#include "hhquad/gauss_legendre.hpp"
#include "hhquad/jet.hpp"

namespace hhquad {

double TaylorExpansion::evaluate(double x) const {
  const double u = x - x0;
  double acc = 0.0;
  for (auto it = poly_coeffs.rbegin(); it != poly_coeffs.rend(); ++it) {
    acc = acc * u + *it;
  }
  return acc;
}

TaylorExpansion taylor_expand(const Expr& f, double x0, int r) {
  if (r < 1) {
    throw ConfigError("Taylor order r must be positive");
  }
  const Jet<double> jet = eval_jet(f, x0, r - 1);
  TaylorExpansion t;
  t.x0 = x0;
  t.order_r = r;
  t.poly_coeffs.resize(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) t.poly_coeffs[static_cast<std::size_t>(k)] = jet[k];
  return t;
}

double taylor_polynomial(const Expr& f, double x0, int r, double x) {
  return taylor_expand(f, x0, r).evaluate(x);
}

namespace {

// f^(r)(t) = r! * coeffs[r]; the remainder integrand divides by (r-1)!, so
// only a single factor r survives.
double scaled_rth_derivative(const Expr& f, double t, int r) {
  return static_cast<double>(r) * eval_jet(f, t, r)[r];
}

}  // namespace

double taylor_remainder(const Expr& f, double x0, int r, double x, int gl_order,
                        RemainderForm form) {
  if (r < 1) {
    throw ConfigError("Taylor order r must be positive");
  }
  if (gl_order < 2) {
    throw ConfigError("Gauss-Legendre order must be at least 2");
  }
  if (x == x0) return 0.0;

  const GaussLegendreRule rule = gauss_legendre(gl_order);
  double sum = 0.0;
  if (form == RemainderForm::kDirect) {
    const double mid = 0.5 * (x0 + x);
    const double half = 0.5 * (x - x0);  // signed: orients the integral
    for (int i = 0; i < gl_order; ++i) {
      const double t = mid + half * rule.nodes[static_cast<std::size_t>(i)];
      const double kernel =r == 1 ? 1.0 : std::pow(x - t, r - 1);
      sum += rule.weights[static_cast<std::size_t>(i)] * kernel *
             scaled_rth_derivative(f, t, r);
    }
    return sum * half;
  }

  // Shifted form: u = x - x0, integrate (u - t)^(r-1) f^(r)(x0 + t) over
  // t in [0, u].
  const double u = x - x0;
  const double half = 0.5 * u;
  for (int i = 0; i < gl_order; ++i) {
    const double t = half + half * rule.nodes[static_cast<std::size_t>(i)];
    const double kernel = r == 1 ? 1.0 : std::pow(u - t, r - 1);
    sum += rule.weights[static_cast<std::size_t>(i)] * kernel *
           scaled_rth_derivative(f, x0 + t, r);
  }
  return sum * half;
}

}  // namespace hhquad
