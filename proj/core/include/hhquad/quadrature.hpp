#pragma once

#include <vector>

#include "hhquad/bounds.hpp"
#include "hhquad/counters.hpp"
#include "hhquad/curvature.hpp"
#include "hhquad/expr.hpp"

namespace hhquad {

enum class QuadMethod { kFixed, kAdaptive };

struct QuadConfig {
  QuadMethod method = QuadMethod::kAdaptive;
  /// Fixed mode: the (uniform) panel count. Adaptive mode: the initial grid.
  int panels_n = 1;
  /// Adaptive target: enclosure width on the integral (not the mean).
  double tolerance = 1e-6;
  int max_panels = 4096;

  CurvatureMode curvature_mode = CurvatureMode::kRigorous;
  /// Used when curvature_mode == kManual; validated via manual_bounds().
  double manual_m = 0.0;
  double manual_M = 0.0;
  /// Rigorous-curvature bisection budget spent on each panel.
  int curvature_budget_per_panel = 32;
  /// Reuse the whole-domain (m, M) for every panel instead of recomputing
  /// per panel. Off by default: per-panel bounds tighten as panels shrink.
  bool global_curvature = false;

  KernelSet kernels;

  /// Kahan summation of the panel contributions (stress-test switch; the
  /// default plain sum is already deterministic).
  bool compensated_sum = false;
  /// Keep per-panel reports in the result.
  bool record_panels = false;

  void validate() const;  // throws ConfigError
};

struct PanelReport {
  Interval domain;
  Enclosure enclosure;  // on the mean value over the panel
};

struct QuadReport {
  /// Two-sided enclosure of the integral over [a, b]: the index-ordered sum
  /// of width-scaled panel enclosures.
  Interval integral_bounds;
  bool certified = false;
  bool tolerance_met = false;
  int panel_count = 0;
  EvalCounters evaluations;
  /// Union of kernels applied across panels, in canonical order.
  std::vector<Kernel> kernels_used;
  /// Filled when cfg.record_panels is set, ascending by domain.
  std::vector<PanelReport> panels;
};

/// Uniform partition into cfg.panels_n panels; every panel gets its own
/// curvature bounds unless cfg.global_curvature is set.
QuadReport integrate_fixed(const Expr& f, double a, double b, const QuadConfig& cfg);

/// Bisects the panel with the largest width-scaled enclosure width (ties:
/// leftmost) until the total enclosure width meets cfg.tolerance or the
/// panel count reaches cfg.max_panels. certified additionally requires
/// tolerance_met.
QuadReport integrate_adaptive(const Expr& f, double a, double b, const QuadConfig& cfg);

/// Dispatches on cfg.method.
QuadReport integrate(const Expr& f, double a, double b, const QuadConfig& cfg);

/// Composite Simpson reference value (n even panels). A plain floating-point
/// estimate for tests and --compare output; never feeds certified results.
double oracle_integrate(const Expr& f, double a, double b, int n);

}  // namespace hhquad
