#include "hhquad/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "hhquad/errors.hpp"

namespace hhquad {

PanelData::PanelData(double a_, double b_, double fa_, double fb_, double fmid_,
                     double dfa_, double dfb_)
    : a(a_), b(b_), fa(fa_), fb(fb_), fmid(fmid_), dfa(dfa_), dfb(dfb_) {
  if (!(a < b)) {
    throw DomainError("panel requires a < b");
  }
  for (double v : {a, b, fa, fb, fmid, dfa, dfb}) {
    if (!std::isfinite(v)) {
      throw DomainError("panel data contains a non-finite value");
    }
  }
}

std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kMidpoint: return "midpoint";
    case Kernel::kTrapezoid: return "trapezoid";
    case Kernel::kUjevic: return "ujevic";
    case Kernel::kClassicHH: return "classic_hh";
  }
  return "?";
}

KernelSet KernelSet::parse(std::string_view csv) {
  KernelSet set{.midpoint = false, .trapezoid = false, .ujevic = false,
                .classic_hh = false, .auto_shape = false};
  std::size_t pos = 0;
  bool any = false;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view token = csv.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      any = true;
      if (token == "midpoint") {
        set.midpoint = true;
      } else if (token == "trapezoid") {
        set.trapezoid = true;
      } else if (token == "ujevic") {
        set.ujevic = true;
      } else if (token == "classic_hh") {
        set.classic_hh = true;
      } else if (token == "auto") {
        set.auto_shape = true;
      } else {
        throw ConfigError("unknown kernel '" + std::string(token) + "'");
      }
    }
    pos = comma + 1;
  }
  if (!any || (set.none_selected() && !set.auto_shape)) {
    throw ConfigError("kernel list selects nothing");
  }
  return set;
}

std::string KernelSet::to_string() const {
  std::string out;
  const auto add = [&out](std::string_view name) {
    if (!out.empty()) out += ",";
    out += name;
  };
  if (midpoint) add("midpoint");
  if (trapezoid) add("trapezoid");
  if (ujevic) add("ujevic");
  if (classic_hh) add("classic_hh");
  if (auto_shape) add("auto");
  return out;
}

namespace {

void require_domain_covers(const PanelData& p, const CurvatureBounds& c) {
  if (!(c.domain.lo <= p.a && p.b <= c.domain.hi)) {
    throw EnclosureError("curvature domain does not cover the panel");
  }
}

}  // namespace

Interval midpoint_pair(const PanelData& p, const CurvatureBounds& c) {
  require_domain_covers(p, c);
  const double w2 = p.width() * p.width();
  // fmid + m/24 w^2 <= fmid + M/24 w^2 holds in floating point as well:
  // both endpoints are monotone images of m <= M.
  Interval r;
  r.lo = p.fmid + (c.m / 24.0) * w2;
  r.hi = p.fmid + (c.M / 24.0) * w2;
  return r;
}

Interval trapezoid_pair(const PanelData& p, const CurvatureBounds& c) {
  require_domain_covers(p, c);
  const double w2 = p.width() * p.width();
  const double avg = 0.5 * (p.fa + p.fb);
  Interval r;
  r.lo = avg - (c.M / 12.0) * w2;
  r.hi = avg - (c.m / 12.0) * w2;
  return r;
}

Interval ujevic_pair(const PanelData& p, const CurvatureBounds& c) {
  require_domain_covers(p, c);
  if (c.m < 0.0) {
    throw EnclosureError("ujevic bounds require certified convexity (m >= 0)");
  }
  const double s8 = (p.dfb - p.dfa) * p.width() / 8.0;
  const double lo = 0.5 * (p.fa + p.fb) - s8;
  const double hi = p.fmid + s8;
  // For affine integrands the two sides agree and rounding can flip their
  // order by an ulp; return them sorted.
  Interval r;
  r.lo = std::min(lo, hi);
  r.hi = std::max(lo, hi);
  return r;
}

Interval classic_hh_pair(const PanelData& p, Shape shape, const CurvatureBounds& c) {
  require_domain_covers(p, c);
  if (shape == Shape::kConvex && c.m < 0.0) {
    throw EnclosureError("classic bounds for a convex shape require m >= 0");
  }
  if (shape == Shape::kConcave && c.M > 0.0) {
    throw EnclosureError("classic bounds for a concave shape require M <= 0");
  }
  const double avg = 0.5 * (p.fa + p.fb);
  const double lo = shape == Shape::kConvex ? p.fmid : avg;
  const double hi = shape == Shape::kConvex ? avg : p.fmid;
  Interval r;
  r.lo = std::min(lo, hi);
  r.hi = std::max(lo, hi);
  return r;
}

std::vector<Kernel> Enclosure::contributors() const {
  if (lower_by == upper_by) return {lower_by};
  return {lower_by, upper_by};
}

KernelSet resolve_kernels(const KernelSet& kernels, const CurvatureBounds& c) {
  KernelSet r = kernels;
  if (r.auto_shape) {
    if (c.m >= 0.0) {
      r.ujevic = true;
      r.classic_hh = true;
    } else if (c.M <= 0.0) {
      r.classic_hh = true;
    }
    r.auto_shape = false;
  }
  if (r.none_selected()) {
    throw ConfigError("no quadrature kernels selected");
  }
  return r;
}

Enclosure enclose_panel(const PanelData& p, const CurvatureBounds& c,
                        const KernelSet& kernels) {
  if (kernels.none_selected()) {
    throw ConfigError("no quadrature kernels selected");
  }

  Enclosure enc;
  enc.certified = c.certified();
  bool first = true;
  double lo = 0.0;
  double hi = 0.0;

  const auto apply = [&](Kernel k, const Interval& raw) {
    const double klo = nudge(raw.lo, -kKernelSlackUlps);
    const double khi = nudge(raw.hi, +kKernelSlackUlps);
    if (first || klo > lo) {
      lo = first ? klo : std::max(lo, klo);
      enc.lower_by = k;
    }
    if (first || khi < hi) {
      hi = first ? khi : std::min(hi, khi);
      enc.upper_by = k;
    }
    first = false;
  };

  if (kernels.midpoint) apply(Kernel::kMidpoint, midpoint_pair(p, c));
  if (kernels.trapezoid) apply(Kernel::kTrapezoid, trapezoid_pair(p, c));
  if (kernels.ujevic) apply(Kernel::kUjevic, ujevic_pair(p, c));
  if (kernels.classic_hh) {
    const Shape shape = c.m >= 0.0 ? Shape::kConvex : Shape::kConcave;
    apply(Kernel::kClassicHH, classic_hh_pair(p, shape, c));
  }

  if (lo > hi) {
    throw EnclosureError("inconsistent curvature data (empty kernel intersection)");
  }
  enc.bounds.lo = lo;
  enc.bounds.hi = hi;
  return enc;
}

}  // namespace hhquad
