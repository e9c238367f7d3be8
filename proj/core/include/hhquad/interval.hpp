#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace hhquad {

/// Closed interval [lo, hi] with finite endpoints.
///
/// Every elementary operation returns a result whose endpoints were moved
/// outward by `kOutwardUlps` ulps, a stand-in for directed rounding: the
/// slack absorbs round-to-nearest error of the endpoint computations at desk
/// scale. It is not a proven rounding model; see the README for the caveat.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double v);  // point interval, intentionally implicit
  Interval(double lo, double hi);

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  /// Largest absolute value over the interval.
  double mag() const;

  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& inner) const { return lo <= inner.lo && inner.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Outward slack applied after each elementary interval operation.
inline constexpr int kOutwardUlps = 4;

/// Moves x by `steps` ulps along the real line (negative steps move down).
/// Exact equivalent of iterating nextafter, including across zero.
double nudge(double x, int steps);

/// Each endpoint moved outward by `ulps` ulps.
Interval widen_outward(const Interval& x, int ulps = kOutwardUlps);

Interval operator-(const Interval& x);
Interval operator+(const Interval& x, const Interval& y);
Interval operator-(const Interval& x, const Interval& y);
Interval operator*(const Interval& x, const Interval& y);
/// Throws DomainError when y contains zero.
Interval operator/(const Interval& x, const Interval& y);

Interval exp(const Interval& x);
/// Throws DomainError when x.lo <= 0.
Interval log(const Interval& x);
Interval sin(const Interval& x);
Interval cos(const Interval& x);
/// Throws DomainError when x.lo < 0.
Interval sqrt(const Interval& x);

/// Integer power with a dedicated even-exponent rule: when n is even the
/// result never dips below 0, and is exactly 0 at the lower end when x
/// straddles zero. Negative n requires x to exclude zero.
Interval pow_int(const Interval& x, int n);

/// Smallest interval containing both arguments.
Interval hull(const Interval& x, const Interval& y);
/// Empty when the intervals are disjoint.
std::optional<Interval> intersect(const Interval& x, const Interval& y);

inline bool contains_zero(const Interval& x) { return x.lo <= 0.0 && 0.0 <= x.hi; }

std::string to_string(const Interval& x);
std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace hhquad
