#include "hhquad/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hhquad/errors.hpp"
#include "hhquad/jet.hpp"

namespace hhquad {

std::string_view curvature_mode_name(CurvatureMode mode) {
  switch (mode) {
    case CurvatureMode::kRigorous: return "rigorous";
    case CurvatureMode::kHeuristic: return "heuristic";
    case CurvatureMode::kManual: return "manual";
  }
  return "?";
}

namespace {

struct Piece {
  Interval domain;
  Interval d2;       // enclosure of f'' over domain
  bool splittable = true;
};

Interval second_derivative_enclosure(const Expr& f, const Interval& domain,
                                     EvalCounters* counters) {
  if (counters) ++counters->interval_evals;
  const Jet<Interval> jet = eval_jet(f, domain, 2);
  return jet.derivative(2);
}

CurvatureBounds rigorous_bounds(const Expr& f, const Interval& X, int budget,
                                EvalCounters* counters) {
  std::vector<Piece> pieces;
  pieces.push_back({X, second_derivative_enclosure(f, X, counters)});

  while (static_cast<int>(pieces.size()) < budget) {
    double hull_lo = pieces[0].d2.lo;
    double hull_hi = pieces[0].d2.hi;
    for (const Piece& p : pieces) {
      hull_lo = std::min(hull_lo, p.d2.lo);
      hull_hi = std::max(hull_hi, p.d2.hi);
    }
    // Split the piece whose enclosure endpoint sets the hull; splitting
    // anything else cannot tighten the answer.
    int pick = -1;
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
      const Piece& p = pieces[i];
      if (!p.splittable) continue;
      if (p.d2.lo != hull_lo && p.d2.hi != hull_hi) continue;
      if (pick < 0) {
        pick = i;
        continue;
      }
      const Piece& best = pieces[pick];
      if (p.domain.width() > best.domain.width() ||
          (p.domain.width() == best.domain.width() && p.domain.lo < best.domain.lo)) {
        pick = i;
      }
    }
    if (pick < 0) break;

    Piece& target = pieces[pick];
    const double mid = target.domain.mid();
    if (!(mid > target.domain.lo && mid < target.domain.hi)) {
      target.splittable = false;
      continue;
    }
    const Interval left(target.domain.lo, mid);
    const Interval right(mid, target.domain.hi);
    const Piece left_piece{left, second_derivative_enclosure(f, left, counters)};
    const Piece right_piece{right, second_derivative_enclosure(f, right, counters)};
    pieces[pick] = left_piece;
    pieces.insert(pieces.begin() + pick + 1, right_piece);
  }

  double m = pieces[0].d2.lo;
  double M = pieces[0].d2.hi;
  for (const Piece& p : pieces) {
    m = std::min(m, p.d2.lo);
    M = std::max(M, p.d2.hi);
  }
  return {m, M, CurvatureMode::kRigorous, X};
}

CurvatureBounds heuristic_bounds(const Expr& f, const Interval& X, EvalCounters* counters,
                                 const HeuristicParams& params) {
  if (params.samples < 2) {
    throw ConfigError("heuristic curvature needs at least 2 samples");
  }
  double lo = 0.0;
  double hi = 0.0;
  for (int i = 0; i < params.samples; ++i) {
    const double t = static_cast<double>(i) / (params.samples - 1);
    const double x = X.lo + t * (X.hi - X.lo);
    if (counters) ++counters->jet_evals;
    const double d2 = eval_jet(f, x, 2).derivative(2);
    if (!std::isfinite(d2)) {
      throw DomainError("non-finite second derivative sample in heuristic curvature");
    }
    if (i == 0) {
      lo = hi = d2;
    } else {
      lo = std::min(lo, d2);
      hi = std::max(hi, d2);
    }
  }
  const double pad = params.relative_pad * (hi - lo) + params.absolute_pad;
  return {lo - pad, hi + pad, CurvatureMode::kHeuristic, X};
}

}  // namespace

CurvatureBounds bound_curvature(const Expr& f, const Interval& X, CurvatureMode mode,
                                int budget, EvalCounters* counters,
                                const HeuristicParams& params) {
  if (budget < 1) {
    throw ConfigError("curvature budget must be at least 1");
  }
  switch (mode) {
    case CurvatureMode::kRigorous:
      return rigorous_bounds(f, X, budget, counters);
    case CurvatureMode::kHeuristic:
      return heuristic_bounds(f, X, counters, params);
    case CurvatureMode::kManual:
      throw CurvatureError("manual curvature values must come from manual_bounds()");
  }
  throw CurvatureError("unknown curvature mode");
}

CurvatureBounds manual_bounds(double m, double M, const Interval& X) {
  if (!(std::isfinite(m) && std::isfinite(M))) {
    throw CurvatureError("manual curvature bounds must be finite");
  }
  if (m > M) {
    throw CurvatureError("m exceeds M in manual curvature bounds");
  }
  return {m, M, CurvatureMode::kManual, X};
}

}  // namespace hhquad
