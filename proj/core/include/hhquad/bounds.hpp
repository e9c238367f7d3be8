#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hhquad/curvature.hpp"
#include "hhquad/interval.hpp"

namespace hhquad {

/// Samples of one panel: endpoint and midpoint values of f plus endpoint
/// derivatives. Everything the inequality kernels consume.
struct PanelData {
  double a;
  double b;
  double fa;
  double fb;
  double fmid;
  double dfa;
  double dfb;

  /// Validates a < b and that all values are finite.
  PanelData(double a, double b, double fa, double fb, double fmid, double dfa,
            double dfb);

  double width() const { return b - a; }
};

enum class Kernel : std::uint8_t { kMidpoint, kTrapezoid, kUjevic, kClassicHH };

std::string_view kernel_name(Kernel k);

/// Which kernels to intersect. `auto_shape` additionally enables ujevic and
/// classic_hh on panels whose curvature sign certifies convexity/concavity.
struct KernelSet {
  bool midpoint = true;
  bool trapezoid = true;
  bool ujevic = false;
  bool classic_hh = false;
  bool auto_shape = true;

  bool none_selected() const { return !midpoint && !trapezoid && !ujevic && !classic_hh; }

  /// Parses a comma-separated list: midpoint, trapezoid, ujevic, classic_hh,
  /// auto. Throws ConfigError on unknown tokens or an empty list.
  static KernelSet parse(std::string_view csv);
  std::string to_string() const;
};

enum class Shape { kConvex, kConcave };

// Each kernel bounds the MEAN value of f over [a, b]. The quadrature driver
// scales by the panel width.

/// [fmid + m/24 (b-a)^2, fmid + M/24 (b-a)^2].
Interval midpoint_pair(const PanelData& p, const CurvatureBounds& c);

/// [(fa+fb)/2 - M/12 (b-a)^2, (fa+fb)/2 - m/12 (b-a)^2].
Interval trapezoid_pair(const PanelData& p, const CurvatureBounds& c);

/// [(fa+fb)/2 - S/8, fmid + S/8] with S = (f'(b) - f'(a))(b - a).
/// Requires certified convexity: throws EnclosureError when c.m < 0.
Interval ujevic_pair(const PanelData& p, const CurvatureBounds& c);

/// Convex: [fmid, (fa+fb)/2]. Concave: [(fa+fb)/2, fmid].
/// Throws EnclosureError when the curvature sign does not certify `shape`.
Interval classic_hh_pair(const PanelData& p, Shape shape, const CurvatureBounds& c);

/// Mean-value enclosure of one panel plus provenance.
struct Enclosure {
  Interval bounds;
  bool certified = false;
  Kernel lower_by = Kernel::kMidpoint;
  Kernel upper_by = Kernel::kMidpoint;

  /// Kernels that supplied the two sides (deduplicated).
  std::vector<Kernel> contributors() const;
};

/// Resolves auto_shape against the curvature sign: returns a concrete set
/// with ujevic/classic_hh enabled only where certified. Throws ConfigError
/// when nothing is selected.
KernelSet resolve_kernels(const KernelSet& kernels, const CurvatureBounds& c);

/// Outward slack (ulps per endpoint) applied to every kernel bound before
/// intersection, so certified enclosures survive rounding.
inline constexpr int kKernelSlackUlps = 2;

/// Intersection of the selected kernel intervals. Throws EnclosureError with
/// "inconsistent curvature data" when the intersection is empty (the
/// signature of invalid manual m/M).
Enclosure enclose_panel(const PanelData& p, const CurvatureBounds& c,
                        const KernelSet& kernels);

}  // namespace hhquad
