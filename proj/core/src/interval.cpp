#include "hhquad/interval.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "hhquad/errors.hpp"

namespace hhquad {

namespace {

constexpr double kTwoPi = 6.2831853071795864769;
constexpr double kPi = 3.1415926535897932385;
constexpr double kHalfPi = 1.5707963267948966192;

// Map a finite double to a totally ordered 64-bit integer, so that stepping
// the integer steps the double through adjacent representable values,
// including across zero.
std::int64_t to_ordered(double x) {
  const auto i = std::bit_cast<std::int64_t>(x);
  return i < 0 ? std::numeric_limits<std::int64_t>::min() - i : i;
}

double from_ordered(std::int64_t k) {
  return k < 0 ? std::bit_cast<double>(std::numeric_limits<std::int64_t>::min() - k)
               : std::bit_cast<double>(k);
}

// Builds the result of an elementary operation: endpoints moved outward by
// kOutwardUlps, then checked for overflow.
Interval widened(double lo, double hi) {
  Interval r;
  r.lo = nudge(lo, -kOutwardUlps);
  r.hi = nudge(hi, +kOutwardUlps);
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
    throw DomainError("interval arithmetic overflow");
  }
  return r;
}

Interval widened_nonneg(double lo, double hi) {
  Interval r = widened(lo, hi);
  r.lo = std::max(r.lo, 0.0);
  return r;
}

// Is there an integer k with phase + 2*pi*k inside [lo, hi]? The test is
// inflated by a small margin, so near-misses count as hits; that only makes
// the enclosing range wider, never narrower.
bool contains_phase(double lo, double hi, double phase) {
  const double safety = 1e-12 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
  lo -= safety;
  hi += safety;
  const double k = std::ceil((lo - phase) / kTwoPi);
  return phase + k * kTwoPi <= hi;
}

Interval clamp_unit(Interval r) {
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

}  // namespace

Interval::Interval(double v) : lo(v), hi(v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("Interval endpoint must be finite");
  }
}

Interval::Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("Interval endpoints must be finite");
  }
  if (lo > hi) {
    throw std::invalid_argument("Interval requires lo <= hi");
  }
}

double Interval::mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }

double nudge(double x, int steps) {
  if (steps == 0 || !std::isfinite(x)) return x;
  return from_ordered(to_ordered(x) + steps);
}

Interval widen_outward(const Interval& x, int ulps) {
  Interval r;
  r.lo = nudge(x.lo, -ulps);
  r.hi = nudge(x.hi, +ulps);
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
    throw DomainError("interval arithmetic overflow");
  }
  return r;
}

Interval operator-(const Interval& x) { return Interval(-x.hi, -x.lo); }

Interval operator+(const Interval& x, const Interval& y) {
  return widened(x.lo + y.lo, x.hi + y.hi);
}

Interval operator-(const Interval& x, const Interval& y) {
  return widened(x.lo - y.hi, x.hi - y.lo);
}

Interval operator*(const Interval& x, const Interval& y) {
  const double p1 = x.lo * y.lo;
  const double p2 = x.lo * y.hi;
  const double p3 = x.hi * y.lo;
  const double p4 = x.hi * y.hi;
  return widened(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& x, const Interval& y) {
  if (contains_zero(y)) {
    throw DomainError("division by an interval containing zero");
  }
  const double q1 = x.lo / y.lo;
  const double q2 = x.lo / y.hi;
  const double q3 = x.hi / y.lo;
  const double q4 = x.hi / y.hi;
  return widened(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

Interval exp(const Interval& x) { return widened_nonneg(std::exp(x.lo), std::exp(x.hi)); }

Interval log(const Interval& x) {
  if (x.lo <= 0.0) {
    throw DomainError("log of an interval touching the non-positive axis");
  }
  return widened(std::log(x.lo), std::log(x.hi));
}

Interval sin(const Interval& x) {
  if (x.width() >= kTwoPi) return Interval(-1.0, 1.0);
  const double slo = std::sin(x.lo);
  const double shi = std::sin(x.hi);
  double lo = std::min(slo, shi);
  double hi = std::max(slo, shi);
  Interval r = widened(lo, hi);
  if (contains_phase(x.lo, x.hi, kHalfPi)) r.hi = 1.0;
  if (contains_phase(x.lo, x.hi, -kHalfPi)) r.lo = -1.0;
  return clamp_unit(r);
}

Interval cos(const Interval& x) {
  if (x.width() >= kTwoPi) return Interval(-1.0, 1.0);
  const double clo = std::cos(x.lo);
  const double chi = std::cos(x.hi);
  double lo = std::min(clo, chi);
  double hi = std::max(clo, chi);
  Interval r = widened(lo, hi);
  if (contains_phase(x.lo, x.hi, 0.0)) r.hi = 1.0;
  if (contains_phase(x.lo, x.hi, kPi)) r.lo = -1.0;
  return clamp_unit(r);
}

Interval sqrt(const Interval& x) {
  if (x.lo < 0.0) {
    throw DomainError("sqrt of an interval extending below zero");
  }
  return widened_nonneg(std::sqrt(x.lo), std::sqrt(x.hi));
}

Interval pow_int(const Interval& x, int n) {
  if (n == 0) return widened(1.0, 1.0);
  if (n < 0) {
    if (contains_zero(x)) {
      throw DomainError("negative power of an interval containing zero");
    }
    return Interval(1.0) / pow_int(x, -n);
  }
  const double pl = std::pow(x.lo, n);
  const double ph = std::pow(x.hi, n);
  if (n % 2 == 0) {
    if (x.lo >= 0.0) return widened_nonneg(pl, ph);
    if (x.hi <= 0.0) return widened_nonneg(ph, pl);
    // Straddles zero: minimum is exactly 0, no downward slack needed.
    Interval r = widened(0.0, std::max(pl, ph));
    r.lo = 0.0;
    return r;
  }
  return widened(pl, ph);
}

Interval hull(const Interval& x, const Interval& y) {
  Interval r;
  r.lo = std::min(x.lo, y.lo);
  r.hi = std::max(x.hi, y.hi);
  return r;
}

std::optional<Interval> intersect(const Interval& x, const Interval& y) {
  const double lo = std::max(x.lo, y.lo);
  const double hi = std::min(x.hi, y.hi);
  if (lo > hi) return std::nullopt;
  Interval r;
  r.lo = lo;
  r.hi = hi;
  return r;
}

std::string to_string(const Interval& x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", x.lo, x.hi);
  return buf;
}

std::ostream& operator<<(std::ostream& os, const Interval& x) { return os << to_string(x); }

}  // namespace hhquad
