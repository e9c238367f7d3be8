#include "hhquad/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "hhquad/errors.hpp"
#include "hhquad/jet.hpp"

namespace hhquad {

void QuadConfig::validate() const {
  if (!(tolerance > 0.0)) {
    throw ConfigError("tolerance must be positive");
  }
  if (panels_n < 1) {
    throw ConfigError("panels_n must be at least 1");
  }
  if (max_panels < panels_n) {
    throw ConfigError("max_panels must be at least panels_n");
  }
  if (curvature_budget_per_panel < 1) {
    throw ConfigError("curvature budget must be at least 1");
  }
  if (curvature_mode == CurvatureMode::kManual && manual_m > manual_M) {
    throw CurvatureError("m exceeds M in manual curvature bounds");
  }
}

namespace {

struct WorkPanel {
  double a;
  double b;
  Enclosure enclosure;
  std::vector<Kernel> applied;

  double scaled_width() const { return (b - a) * enclosure.bounds.width(); }
};

struct Driver {
  const Expr& f;
  const QuadConfig& cfg;
  EvalCounters counters;
  std::optional<CurvatureBounds> shared_curvature;  // manual or global mode
  std::vector<Kernel> kernels_used;

  void note_kernels(const KernelSet& set) {
    const auto add = [this](Kernel k, bool on) {
      if (on && std::find(kernels_used.begin(), kernels_used.end(), k) ==
                    kernels_used.end()) {
        kernels_used.push_back(k);
      }
    };
    add(Kernel::kMidpoint, set.midpoint);
    add(Kernel::kTrapezoid, set.trapezoid);
    add(Kernel::kUjevic, set.ujevic);
    add(Kernel::kClassicHH, set.classic_hh);
  }

  WorkPanel make_panel(double a, double b) {
    try {
      counters.f_evals += 3;
      const double fa = eval_real(f, a);
      const double fb = eval_real(f, b);
      const double fmid = eval_real(f, 0.5 * (a + b));
      counters.jet_evals += 2;
      const double dfa = eval_jet(f, a, 1)[1];
      const double dfb = eval_jet(f, b, 1)[1];
      const PanelData data(a, b, fa, fb, fmid, dfa, dfb);

      CurvatureBounds curv =
          shared_curvature ? *shared_curvature
                           : bound_curvature(f, Interval(a, b), cfg.curvature_mode,
                                             cfg.curvature_budget_per_panel, &counters);
      const KernelSet resolved = resolve_kernels(cfg.kernels, curv);
      WorkPanel panel{a, b, enclose_panel(data, curv, resolved), {}};
      note_kernels(resolved);
      return panel;
    } catch (const QuadratureError&) {
      throw;
    } catch (const Error& e) {
      throw QuadratureError(e.what(), a, b);
    }
  }

  QuadReport finish(const std::vector<WorkPanel>& panels, bool tolerance_met) const {
    QuadReport report;
    report.panel_count = static_cast<int>(panels.size());
    report.evaluations = counters;
    report.kernels_used = kernels_used;
    std::sort(report.kernels_used.begin(), report.kernels_used.end());
    report.tolerance_met = tolerance_met;

    double lo = 0.0;
    double hi = 0.0;
    double lo_comp = 0.0;
    double hi_comp = 0.0;
    bool certified = true;
    for (const WorkPanel& p : panels) {
      const double w = p.b - p.a;
      const double plo = w * p.enclosure.bounds.lo;
      const double phi = w * p.enclosure.bounds.hi;
      if (cfg.compensated_sum) {
        // Kahan step.
        double y = plo - lo_comp;
        double t = lo + y;
        lo_comp = (t - lo) - y;
        lo = t;
        y = phi - hi_comp;
        t = hi + y;
        hi_comp = (t - hi) - y;
        hi = t;
      } else {
        lo += plo;
        hi += phi;
      }
      certified = certified && p.enclosure.certified;
    }
    report.integral_bounds.lo = lo;
    report.integral_bounds.hi = hi;
    report.certified = certified;
    if (cfg.record_panels) {
      report.panels.reserve(panels.size());
      for (const WorkPanel& p : panels) {
        report.panels.push_back({Interval(p.a, p.b), p.enclosure});
      }
    }
    return report;
  }
};

Driver make_driver(const Expr& f, double a, double b, const QuadConfig& cfg) {
  if (!(a < b)) {
    throw ConfigError("integration requires a < b");
  }
  cfg.validate();
  Driver d{f, cfg, {}, std::nullopt, {}};
  if (cfg.curvature_mode == CurvatureMode::kManual) {
    d.shared_curvature = manual_bounds(cfg.manual_m, cfg.manual_M, Interval(a, b));
  } else if (cfg.global_curvature) {
    d.shared_curvature = bound_curvature(f, Interval(a, b), cfg.curvature_mode,
                                         kDefaultCurvatureBudget, &d.counters);
  }
  return d;
}

}  // namespace

QuadReport integrate_fixed(const Expr& f, double a, double b, const QuadConfig& cfg) {
  if (cfg.method != QuadMethod::kFixed) {
    throw ConfigError("integrate_fixed requires method = fixed_n");
  }
  Driver driver = make_driver(f, a, b, cfg);
  const int n = cfg.panels_n;
  std::vector<WorkPanel> panels;
  panels.reserve(static_cast<std::size_t>(n));
  double left = a;
  for (int i = 1; i <= n; ++i) {
    const double right = i == n ? b : a + (b - a) * (static_cast<double>(i) / n);
    panels.push_back(driver.make_panel(left, right));
    left = right;
  }
  QuadReport report = driver.finish(panels, /*tolerance_met=*/false);
  report.tolerance_met = report.integral_bounds.width() <= cfg.tolerance;
  return report;
}

QuadReport integrate_adaptive(const Expr& f, double a, double b, const QuadConfig& cfg) {
  if (cfg.method != QuadMethod::kAdaptive) {
    throw ConfigError("integrate_adaptive requires method = adaptive");
  }
  Driver driver = make_driver(f, a, b, cfg);

  std::vector<WorkPanel> panels;  // kept ascending by construction
  panels.reserve(static_cast<std::size_t>(cfg.panels_n));
  double left = a;
  for (int i = 1; i <= cfg.panels_n; ++i) {
    const double right =
        i == cfg.panels_n ? b : a + (b - a) * (static_cast<double>(i) / cfg.panels_n);
    panels.push_back(driver.make_panel(left, right));
    left = right;
  }

  bool tolerance_met = false;
  while (true) {
    double total = 0.0;
    for (const WorkPanel& p : panels) total += p.scaled_width();
    if (total <= cfg.tolerance) {
      tolerance_met = true;
      break;
    }
    if (static_cast<int>(panels.size()) >= cfg.max_panels) break;

    // Worst panel first; ties go to the leftmost so refinement is
    // deterministic.
    int pick = 0;
    for (int i = 1; i < static_cast<int>(panels.size()); ++i) {
      if (panels[i].scaled_width() > panels[pick].scaled_width()) pick = i;
    }
    WorkPanel& target = panels[pick];
    const double mid = 0.5 * (target.a + target.b);
    if (!(mid > target.a && mid < target.b)) break;  // cannot split further

    const WorkPanel right = driver.make_panel(mid, target.b);
    const WorkPanel left_panel = driver.make_panel(target.a, mid);
    panels[pick] = left_panel;
    panels.insert(panels.begin() + pick + 1, right);
  }

  QuadReport report = driver.finish(panels, tolerance_met);
  report.certified = report.certified && tolerance_met;
  return report;
}

QuadReport integrate(const Expr& f, double a, double b, const QuadConfig& cfg) {
  return cfg.method == QuadMethod::kFixed ? integrate_fixed(f, a, b, cfg)
                                          : integrate_adaptive(f, a, b, cfg);
}

double oracle_integrate(const Expr& f, double a, double b, int n) {
  if (n < 2 || n % 2 != 0) {
    throw ConfigError("Simpson oracle requires an even panel count >= 2");
  }
  if (!(a < b)) {
    throw ConfigError("integration requires a < b");
  }
  const double h = (b - a) / n;
  // Kahan-compensated sums keep rounding noise below the truncation error
  // even at n around a million.
  double odd = 0.0;
  double odd_c = 0.0;
  double even = 0.0;
  double even_c = 0.0;
  for (int i = 1; i < n; ++i) {
    const double x = a + (b - a) * (static_cast<double>(i) / n);
    const double v = eval_real(f, x);
    double& sum = i % 2 == 1 ? odd : even;
    double& comp = i % 2 == 1 ? odd_c : even_c;
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  const double ends = eval_real(f, a) + eval_real(f, b);
  return (ends + 4.0 * odd + 2.0 * even) * h / 3.0;
}

}  // namespace hhquad
