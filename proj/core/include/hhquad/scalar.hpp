#pragma once

#include <cmath>

#include "hhquad/interval.hpp"

namespace hhquad {

// Predicates shared by code that is generic over the scalar type
// (double for point evaluation, Interval for enclosure evaluation).

inline bool contains_zero(double x) { return x == 0.0; }

/// Infimum of the scalar viewed as a set of reals.
inline double scalar_inf(double x) { return x; }
inline double scalar_inf(const Interval& x) { return x.lo; }

inline bool scalar_finite(double x) { return std::isfinite(x); }
inline bool scalar_finite(const Interval& x) {
  return std::isfinite(x.lo) && std::isfinite(x.hi);
}

inline double pow_int(double x, int n) { return std::pow(x, n); }

}  // namespace hhquad
