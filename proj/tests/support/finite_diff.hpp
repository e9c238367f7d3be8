#pragma once

namespace testsupport {

// Central finite differences: the independent derivative oracle used to
// cross-check jet coefficients.

template <class F>
double fd_first(F f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double fd_second(F f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace testsupport
