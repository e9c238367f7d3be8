#pragma once

#include <cassert>
#include <cmath>
#include <utility>
#include <vector>

#include "hhquad/errors.hpp"
#include "hhquad/interval.hpp"
#include "hhquad/scalar.hpp"

namespace hhquad {

/// Truncated Taylor coefficient sequence: coeffs[k] = f^(k)(x0) / k! for
/// k = 0..order. The scalar type T is double for point jets and Interval for
/// jets that enclose every expansion point of an input interval.
///
/// Arithmetic follows the standard truncated-Taylor composition rules; sin
/// and cos are produced as a coupled pair.
template <class T>
class Jet {
 public:
  explicit Jet(int order) : c_(static_cast<std::size_t>(order) + 1, T(0.0)) {
    assert(order >= 0);
  }

  static Jet constant(const T& v, int order) {
    Jet j(order);
    j.c_[0] = v;
    return j;
  }

  /// Jet of the identity map at x0: [x0, 1, 0, ...].
  static Jet variable(const T& x0, int order) {
    Jet j(order);
    j.c_[0] = x0;
    if (order >= 1) j.c_[1] = T(1.0);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

  const T& value() const { return c_[0]; }

  /// f^(k)(x0), i.e. coeffs[k] * k!. The factorial is applied factor by
  /// factor so the Interval instantiation stays rigorous at any order.
  T derivative(int k) const {
    T f = c_[static_cast<std::size_t>(k)];
    for (int i = 2; i <= k; ++i) f = f * T(double(i));
    return f;
  }

 private:
  std::vector<T> c_;
};

template <class T>
Jet<T> operator-(const Jet<T>& u) {
  Jet<T> r(u.order());
  for (int k = 0; k <= u.order(); ++k) r[k] = -u[k];
  return r;
}

template <class T>
Jet<T> operator+(const Jet<T>& u, const Jet<T>& v) {
  assert(u.order() == v.order());
  Jet<T> r(u.order());
  for (int k = 0; k <= u.order(); ++k) r[k] = u[k] + v[k];
  return r;
}

template <class T>
Jet<T> operator-(const Jet<T>& u, const Jet<T>& v) {
  assert(u.order() == v.order());
  Jet<T> r(u.order());
  for (int k = 0; k <= u.order(); ++k) r[k] = u[k] - v[k];
  return r;
}

/// Cauchy product truncated at the common order. Exact for the retained
/// coefficients: derivatives of u*v up to order r depend only on derivatives
/// of u and v up to order r.
template <class T>
Jet<T> operator*(const Jet<T>& u, const Jet<T>& v) {
  assert(u.order() == v.order());
  Jet<T> r(u.order());
  for (int k = 0; k <= u.order(); ++k) {
    T acc = T(0.0);
    for (int j = 0; j <= k; ++j) acc = acc + u[j] * v[k - j];
    r[k] = acc;
  }
  return r;
}

template <class T>
Jet<T> operator/(const Jet<T>& u, const Jet<T>& v) {
  assert(u.order() == v.order());
  if (contains_zero(v.value())) {
    throw DomainError("division by a value reaching zero");
  }
  Jet<T> q(u.order());
  for (int k = 0; k <= u.order(); ++k) {
    T acc = u[k];
    for (int j = 1; j <= k; ++j) acc = acc - v[j] * q[k - j];
    q[k] = acc / v[0];
  }
  return q;
}

template <class T>
Jet<T> exp(const Jet<T>& u) {
  using std::exp;
  Jet<T> e(u.order());
  e[0] = exp(u[0]);
  for (int k = 1; k <= u.order(); ++k) {
    T acc = T(0.0);
    for (int j = 1; j <= k; ++j) acc = acc + T(double(j)) * u[j] * e[k - j];
    e[k] = acc / T(double(k));
  }
  return e;
}

template <class T>
Jet<T> log(const Jet<T>& u) {
  using std::log;
  if (scalar_inf(u.value()) <= 0.0) {
    throw DomainError("log of a value reaching the non-positive axis");
  }
  Jet<T> l(u.order());
  l[0] = log(u[0]);
  for (int k = 1; k <= u.order(); ++k) {
    T acc = T(double(k)) * u[k];
    for (int j = 1; j < k; ++j) acc = acc - T(double(j)) * l[j] * u[k - j];
    l[k] = acc / (T(double(k)) * u[0]);
  }
  return l;
}

/// sin and cos share the recurrence, so both are computed at once.
template <class T>
std::pair<Jet<T>, Jet<T>> sin_cos(const Jet<T>& u) {
  using std::cos;
  using std::sin;
  Jet<T> s(u.order());
  Jet<T> c(u.order());
  s[0] = sin(u[0]);
  c[0] = cos(u[0]);
  for (int k = 1; k <= u.order(); ++k) {
    T sa = T(0.0);
    T ca = T(0.0);
    for (int j = 1; j <= k; ++j) {
      sa = sa + T(double(j)) * u[j] * c[k - j];
      ca = ca + T(double(j)) * u[j] * s[k - j];
    }
    s[k] = sa / T(double(k));
    c[k] = -(ca / T(double(k)));
  }
  return {std::move(s), std::move(c)};
}

template <class T>
Jet<T> sin(const Jet<T>& u) {
  return sin_cos(u).first;
}

template <class T>
Jet<T> cos(const Jet<T>& u) {
  return sin_cos(u).second;
}

template <class T>
Jet<T> sqrt(const Jet<T>& u) {
  using std::sqrt;
  const double inf = scalar_inf(u.value());
  if (inf < 0.0 || (inf <= 0.0 && u.order() >= 1)) {
    throw DomainError("sqrt of a value reaching zero or below");
  }
  Jet<T> s(u.order());
  s[0] = sqrt(u[0]);
  for (int k = 1; k <= u.order(); ++k) {
    T acc = u[k];
    for (int j = 1; j < k; ++j) acc = acc - s[j] * s[k - j];
    s[k] = acc / (T(2.0) * s[0]);
  }
  return s;
}

/// Integer power by binary exponentiation; negative exponents go through the
/// division recurrence and require the value to exclude zero.
template <class T>
Jet<T> pow_int(const Jet<T>& u, int n) {
  if (n == 0) return Jet<T>::constant(T(1.0), u.order());
  if (n < 0) {
    if (contains_zero(u.value())) {
      throw DomainError("negative power of a value reaching zero");
    }
    return Jet<T>::constant(T(1.0), u.order()) / pow_int(u, -n);
  }
  Jet<T> base = u;
  Jet<T> acc = Jet<T>::constant(T(1.0), u.order());
  int e = n;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

}  // namespace hhquad
