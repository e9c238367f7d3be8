#include <cmath>
#include <string>
#include <vector>

#include "hhquad/errors.hpp"
#include "hhquad/expr.hpp"
#include "hhquad/interval.hpp"
#include "hhquad/jet.hpp"
#include "hhquad/scalar.hpp"

namespace hhquad {

namespace {

[[noreturn]] void throw_domain(const char* what, const ExprNode& n) {
  throw DomainError(std::string(what) + " (node '" + std::string(node_name(n.kind)) +
                    "' at offset " + std::to_string(n.offset) + ")");
}

// The arena stores children before parents, so a single forward pass
// evaluates the whole tree.
template <class S>
S eval_scalar_impl(const Expr& f, const S& x) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  std::vector<S> vals;
  vals.reserve(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) {
    const ExprNode& n = f.node(i);
    switch (n.kind) {
      case NodeKind::kConstant:
        vals.push_back(S(n.value));
        break;
      case NodeKind::kVariable:
        vals.push_back(x);
        break;
      case NodeKind::kNeg:
        vals.push_back(-vals[n.a]);
        break;
      case NodeKind::kExp:
        vals.push_back(exp(vals[n.a]));
        break;
      case NodeKind::kLog:
        if (scalar_inf(vals[n.a]) <= 0.0) throw_domain("log of a non-positive value", n);
        vals.push_back(log(vals[n.a]));
        break;
      case NodeKind::kSin:
        vals.push_back(sin(vals[n.a]));
        break;
      case NodeKind::kCos:
        vals.push_back(cos(vals[n.a]));
        break;
      case NodeKind::kSqrt:
        if (scalar_inf(vals[n.a]) < 0.0) throw_domain("sqrt of a negative value", n);
        vals.push_back(sqrt(vals[n.a]));
        break;
      case NodeKind::kAdd:
        vals.push_back(vals[n.a] + vals[n.b]);
        break;
      case NodeKind::kSub:
        vals.push_back(vals[n.a] - vals[n.b]);
        break;
      case NodeKind::kMul:
        vals.push_back(vals[n.a] * vals[n.b]);
        break;
      case NodeKind::kDiv:
        if (contains_zero(vals[n.b])) throw_domain("division by zero", n);
        vals.push_back(vals[n.a] / vals[n.b]);
        break;
      case NodeKind::kPow:
        if (n.exponent < 0 && contains_zero(vals[n.a])) {
          throw_domain("zero raised to a negative power", n);
        }
        vals.push_back(pow_int(vals[n.a], n.exponent));
        break;
    }
  }
  return vals[static_cast<std::size_t>(f.root())];
}

template <class T>
Jet<T> eval_jet_impl(const Expr& f, const T& x0, int order) {
  std::vector<Jet<T>> vals;
  vals.reserve(static_cast<std::size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) {
    const ExprNode& n = f.node(i);
    switch (n.kind) {
      case NodeKind::kConstant:
        vals.push_back(Jet<T>::constant(T(n.value), order));
        break;
      case NodeKind::kVariable:
        vals.push_back(Jet<T>::variable(x0, order));
        break;
      case NodeKind::kNeg:
        vals.push_back(-vals[n.a]);
        break;
      case NodeKind::kExp:
        vals.push_back(exp(vals[n.a]));
        break;
      case NodeKind::kLog:
        if (scalar_inf(vals[n.a].value()) <= 0.0) {
          throw_domain("log of a non-positive value", n);
        }
        vals.push_back(log(vals[n.a]));
        break;
      case NodeKind::kSin:
        vals.push_back(sin(vals[n.a]));
        break;
      case NodeKind::kCos:
        vals.push_back(cos(vals[n.a]));
        break;
      case NodeKind::kSqrt: {
        const double inf = scalar_inf(vals[n.a].value());
        if (inf < 0.0 || (inf <= 0.0 && order >= 1)) {
          throw_domain("sqrt of a value reaching zero or below", n);
        }
        vals.push_back(sqrt(vals[n.a]));
        break;
      }
      case NodeKind::kAdd:
        vals.push_back(vals[n.a] + vals[n.b]);
        break;
      case NodeKind::kSub:
        vals.push_back(vals[n.a] - vals[n.b]);
        break;
      case NodeKind::kMul:
        vals.push_back(vals[n.a] * vals[n.b]);
        break;
      case NodeKind::kDiv:
        if (contains_zero(vals[n.b].value())) throw_domain("division by zero", n);
        vals.push_back(vals[n.a] / vals[n.b]);
        break;
      case NodeKind::kPow:
        if (n.exponent < 0 && contains_zero(vals[n.a].value())) {
          throw_domain("zero raised to a negative power", n);
        }
        vals.push_back(pow_int(vals[n.a], n.exponent));
        break;
    }
  }
  return vals[static_cast<std::size_t>(f.root())];
}

void check_order(int order) {
  if (order < 0) {
    throw ConfigError("jet order must be non-negative");
  }
}

}  // namespace

double eval_real(const Expr& f, double x) { return eval_scalar_impl<double>(f, x); }

Interval eval_interval(const Expr& f, const Interval& X) {
  return eval_scalar_impl<Interval>(f, X);
}

Jet<double> eval_jet(const Expr& f, double x0, int order) {
  check_order(order);
  return eval_jet_impl<double>(f, x0, order);
}

Jet<Interval> eval_jet(const Expr& f, const Interval& x0, int order) {
  check_order(order);
  return eval_jet_impl<Interval>(f, x0, order);
}

}  // namespace hhquad
