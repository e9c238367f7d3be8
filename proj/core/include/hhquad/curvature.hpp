#pragma once

#include <string_view>

#include "hhquad/counters.hpp"
#include "hhquad/expr.hpp"
#include "hhquad/interval.hpp"

namespace hhquad {

enum class CurvatureMode { kRigorous, kHeuristic, kManual };

std::string_view curvature_mode_name(CurvatureMode mode);

/// Two-sided bound on the second derivative over `domain`: m <= f'' <= M.
/// Only rigorous and manual bounds certify enclosures built from them;
/// heuristic bounds are best-effort and marked as such downstream.
struct CurvatureBounds {
  double m = 0.0;
  double M = 0.0;
  CurvatureMode mode = CurvatureMode::kManual;
  Interval domain;

  bool certified() const { return mode != CurvatureMode::kHeuristic; }
};

inline constexpr int kDefaultCurvatureBudget = 256;

/// Knobs for heuristic mode: sample count and the outward padding applied
/// to the sampled min/max.
struct HeuristicParams {
  int samples = 1024;
  double relative_pad = 0.01;   // fraction of the sampled spread
  double absolute_pad = 1e-12;
};

/// Bounds f'' over X.
///
/// Rigorous mode evaluates order-2 interval jets over a partition of X that
/// is refined by bisection, always splitting the subinterval whose f''
/// enclosure endpoint determines the current hull (ties: wider subinterval,
/// then smaller left endpoint), until the partition holds `budget` pieces.
/// Exhausting the budget is not an error; the hull is valid at any stage.
///
/// Heuristic mode samples f'' at uniform points and pads the observed range
/// outward. Manual mode is rejected here: manual values enter through
/// manual_bounds().
CurvatureBounds bound_curvature(const Expr& f, const Interval& X, CurvatureMode mode,
                                int budget = kDefaultCurvatureBudget,
                                EvalCounters* counters = nullptr,
                                const HeuristicParams& params = {});

/// Wraps caller-supplied values; throws CurvatureError when m > M.
CurvatureBounds manual_bounds(double m, double M, const Interval& X);

}  // namespace hhquad
