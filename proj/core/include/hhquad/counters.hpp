#pragma once

#include <cstdint>

namespace hhquad {

/// Work counters threaded through the drivers: how many point, jet, and
/// interval evaluations of the integrand a computation performed.
struct EvalCounters {
  std::uint64_t f_evals = 0;
  std::uint64_t jet_evals = 0;
  std::uint64_t interval_evals = 0;

  EvalCounters& operator+=(const EvalCounters& other) {
    f_evals += other.f_evals;
    jet_evals += other.jet_evals;
    interval_evals += other.interval_evals;
    return *this;
  }
};

}  // namespace hhquad
