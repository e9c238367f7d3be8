#include <cmath>
#include <string>

#include "doctest.h"
#include "hhquad/bounds.hpp"
#include "hhquad/errors.hpp"
#include "hhquad/expr.hpp"
#include "hhquad/quadrature.hpp"
#include "support/expr_gen.hpp"

using namespace hhquad;
using testsupport::ExprGen;

namespace {

constexpr double kPi = 3.14159265358979323846;

PanelData sample_panel(const Expr& f, double a, double b) {
  return PanelData(a, b, eval_real(f, a), eval_real(f, b), eval_real(f, 0.5 * (a + b)),
                   eval_jet(f, a, 1)[1], eval_jet(f, b, 1)[1]);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("x^2 on [0,1] collapses every kernel to the sharp value") {
  const PanelData p(0.0, 1.0, 0.0, 1.0, 0.25, 0.0, 2.0);
  const CurvatureBounds c = manual_bounds(2.0, 2.0, Interval(0.0, 1.0));

  const Interval mid = midpoint_pair(p, c);
  CHECK(mid.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(mid.hi == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const Interval trap = trapezoid_pair(p, c);
  CHECK(trap.lo == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(trap.hi == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // S = (f'(1) - f'(0)) * (1 - 0) = 2, so the offsets are S/8 = 0.25.
  const Interval uj = ujevic_pair(p, c);
  CHECK(uj.lo == 0.25);
  CHECK(uj.hi == 0.5);

  const Interval hh = classic_hh_pair(p, Shape::kConvex, c);
  CHECK(hh.lo == 0.25);
  CHECK(hh.hi == 0.5);

  KernelSet all;
  all.ujevic = true;
  all.classic_hh = true;
  const Enclosure enc = enclose_panel(p, c, all);
  CHECK(enc.bounds.contains(1.0 / 3.0));
  CHECK(enc.bounds.width() <= 1e-14);
  CHECK(enc.certified);
}

TEST_CASE("affine panels are exact") {
  // f = 2x + 1 on [0, 1].
  const PanelData p(0.0, 1.0, 1.0, 3.0, 2.0, 2.0, 2.0);
  const CurvatureBounds c = manual_bounds(0.0, 0.0, Interval(0.0, 1.0));
  CHECK(midpoint_pair(p, c) == Interval(2.0, 2.0));
  CHECK(trapezoid_pair(p, c) == Interval(2.0, 2.0));
  CHECK(ujevic_pair(p, c) == Interval(2.0, 2.0));
  CHECK(classic_hh_pair(p, Shape::kConvex, c) == Interval(2.0, 2.0));
  CHECK(classic_hh_pair(p, Shape::kConcave, c) == Interval(2.0, 2.0));
}

TEST_CASE("exp on [0,1] with m=1, M=e") {
  const Expr f = Expr::parse("exp(x)");
  const PanelData p = sample_panel(f, 0.0, 1.0);
  const CurvatureBounds c = manual_bounds(1.0, std::exp(1.0), Interval(0.0, 1.0));

  const double mean = oracle_integrate(f, 0.0, 1.0, 1000000);  // e - 1
  CHECK(mean == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

  const Interval mid = midpoint_pair(p, c);
  const double root_e = std::exp(0.5);
  CHECK(mid.lo == doctest::Approx(root_e + 1.0 / 24.0).epsilon(1e-12));
  CHECK(mid.hi == doctest::Approx(root_e + std::exp(1.0) / 24.0).epsilon(1e-12));
  CHECK(mid.contains(mean));

  // Ujevic offsets: S/8 with S = (e - 1).
  const Interval uj = ujevic_pair(p, c);
  const double s8 = (std::exp(1.0) - 1.0) / 8.0;
  CHECK(uj.lo == doctest::Approx((1.0 + std::exp(1.0)) / 2.0 - s8).epsilon(1e-12));
  CHECK(uj.hi == doctest::Approx(root_e + s8).epsilon(1e-12));
  CHECK(uj.contains(mean));
}

TEST_CASE("sin on [0,pi] with m=-1, M=0") {
  const Expr f = Expr::parse("sin(x)");
  const PanelData p = sample_panel(f, 0.0, kPi);
  const CurvatureBounds c = manual_bounds(-1.0, 0.0, Interval(0.0, kPi));
  const double mean = 2.0 / kPi;

  const Interval trap = trapezoid_pair(p, c);
  CHECK(trap.lo == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::fabs(trap.lo) <= 1e-12);
  CHECK(trap.hi == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-12));
  CHECK(trap.contains(mean));

  const Interval mid = midpoint_pair(p, c);
  CHECK(mid.lo == doctest::Approx(1.0 - kPi * kPi / 24.0).epsilon(1e-12));
  CHECK(mid.hi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mid.contains(mean));

  // Concave case of the classic inequalities: [avg, fmid] = [0, 1].
  const Interval hh = classic_hh_pair(p, Shape::kConcave, c);
  CHECK(hh.lo == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(hh.hi == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(hh.contains(mean));

  KernelSet mt;  // midpoint + trapezoid only
  mt.auto_shape = false;
  const Enclosure enc = enclose_panel(p, c, mt);
  CHECK(enc.bounds.lo == doctest::Approx(1.0 - kPi * kPi / 24.0).epsilon(1e-11));
  CHECK(enc.bounds.hi == doctest::Approx(kPi * kPi / 12.0).epsilon(1e-11));
  CHECK(enc.bounds.contains(mean));
  CHECK(enc.lower_by == Kernel::kMidpoint);
  CHECK(enc.upper_by == Kernel::kTrapezoid);
}

TEST_CASE("ujevic requires certified convexity") {
  const Expr f = Expr::parse("sin(x)");
  const PanelData p = sample_panel(f, 0.0, kPi);
  const CurvatureBounds c = manual_bounds(-1.0, 0.0, Interval(0.0, kPi));
  CHECK_THROWS_AS(ujevic_pair(p, c), EnclosureError);

  KernelSet with_ujevic;
  with_ujevic.ujevic = true;
  with_ujevic.auto_shape = false;
  CHECK_THROWS_AS(enclose_panel(p, c, with_ujevic), EnclosureError);
}

TEST_CASE("classic kernel rejects uncertified shapes") {
  const PanelData p(0.0, 1.0, 0.0, 1.0, 0.25, 0.0, 2.0);
  const CurvatureBounds indefinite = manual_bounds(-1.0, 1.0, Interval(0.0, 1.0));
  CHECK_THROWS_AS(classic_hh_pair(p, Shape::kConvex, indefinite), EnclosureError);
  CHECK_THROWS_AS(classic_hh_pair(p, Shape::kConcave, indefinite), EnclosureError);
}

TEST_CASE("inconsistent manual curvature yields an empty intersection") {
  const PanelData p(0.0, 1.0, 0.0, 1.0, 0.25, 0.0, 2.0);
  const CurvatureBounds wrong = manual_bounds(10.0, 11.0, Interval(0.0, 1.0));
  KernelSet mt;
  mt.auto_shape = false;
  try {
    enclose_panel(p, wrong, mt);
    FAIL("expected EnclosureError");
  } catch (const EnclosureError& e) {
    CHECK(std::string(e.what()).find("inconsistent curvature data") != std::string::npos);
  }
}

TEST_CASE("curvature domain must cover the panel") {
  const PanelData p(0.0, 2.0, 0.0, 4.0, 1.0, 0.0, 4.0);
  const CurvatureBounds c = manual_bounds(2.0, 2.0, Interval(0.0, 1.0));
  CHECK_THROWS_AS(midpoint_pair(p, c), EnclosureError);
}

TEST_CASE("width identities: pure arithmetic of the kernel constants") {
  ExprGen gen(31337);
  for (int i = 0; i < 200; ++i) {
    const double a = gen.uniform(-5.0, 5.0);
    const double w = gen.uniform(1e-3, 10.0);
    const double m = gen.uniform(-5.0, 5.0);
    const double M = m + gen.uniform(0.5, 10.0);
    const PanelData p(a, a + w, 0.0, 0.0, 0.0, 0.0, 0.0);
    const CurvatureBounds c = manual_bounds(m, M, Interval(a, a + w));
    const double expected_mid = (M - m) * w * w / 24.0;
    const double expected_trap = (M - m) * w * w / 12.0;
    CAPTURE(a);
    CAPTURE(w);
    CAPTURE(m);
    CAPTURE(M);
    CHECK(std::fabs(midpoint_pair(p, c).width() - expected_mid) <= 1e-13 * expected_mid);
    CHECK(std::fabs(trapezoid_pair(p, c).width() - expected_trap) <=
          1e-13 * expected_trap);
  }
}

TEST_CASE("sharpness: f = (x-a)^2 collapses both sides to (b-a)^2/3") {
  ExprGen gen(808);
  for (int i = 0; i < 50; ++i) {
    const double a = gen.uniform(-5.0, 4.0);
    const double b = a + gen.uniform(0.1, 5.0 - std::max(a, 0.0) > 0.1 ? 5.0 - std::max(a, 0.0) : 0.1);
    char text[80];
    std::snprintf(text, sizeof(text), "(x - %.17g)^2", a);
    const Expr f = Expr::parse(text);
    const PanelData p = sample_panel(f, a, b);
    const CurvatureBounds c = bound_curvature(f, Interval(a, b), CurvatureMode::kRigorous, 8);
    const double sharp = (b - a) * (b - a) / 3.0;
    CAPTURE(a);
    CAPTURE(b);
    CHECK(midpoint_pair(p, c).lo == doctest::Approx(sharp).epsilon(1e-12));
    CHECK(trapezoid_pair(p, c).hi == doctest::Approx(sharp).epsilon(1e-12));
  }
}

TEST_CASE("specialization: m=0 recaptures the classic convex bounds") {
  ExprGen gen(616);
  for (int i = 0; i < 100; ++i) {
    const double a = gen.uniform(-3.0, 3.0);
    const double w = gen.uniform(0.01, 2.0);
    const double fa = gen.uniform(-2.0, 2.0);
    const double fb = gen.uniform(-2.0, 2.0);
    const double avg = 0.5 * (fa + fb);
    // Convex data: fmid below the chord.
    const double fmid = avg - gen.uniform(0.0, 1.0);
    const PanelData p(a, a + w, fa, fb, fmid, 0.0, 1.0);

    const CurvatureBounds convex = manual_bounds(0.0, gen.uniform(0.0, 5.0), p.domain());
    const Interval hh = classic_hh_pair(p, Shape::kConvex, convex);
    CHECK(midpoint_pair(p, convex).lo == hh.lo);   // both are exactly fmid
    CHECK(trapezoid_pair(p, convex).hi == hh.hi);  // both are exactly (fa+fb)/2

    // Concave data: fmid above the chord, M = 0.
    const double fmid_up = avg + gen.uniform(0.0, 1.0);
    const PanelData q(a, a + w, fa, fb, fmid_up, 0.0, 1.0);
    const CurvatureBounds concave = manual_bounds(-gen.uniform(0.0, 5.0), 0.0, q.domain());
    const Interval hh5 = classic_hh_pair(q, Shape::kConcave, concave);
    CHECK(trapezoid_pair(q, concave).lo == hh5.lo);  // (fa+fb)/2
    CHECK(midpoint_pair(q, concave).hi == hh5.hi);   // fmid
  }
}

TEST_CASE("kernel intervals and enclosures contain the oracle mean") {
  ExprGen gen(271828);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string text = gen.smooth();
    CAPTURE(text);
    const Expr f = Expr::parse(text);
    const double a = gen.uniform(-3.0, 2.9);
    const double b = a + gen.uniform(0.01, std::min(3.0 - a, 3.0));
    const PanelData p = sample_panel(f, a, b);
    const CurvatureBounds c = bound_curvature(f, Interval(a, b), CurvatureMode::kRigorous, 64);

    const double mean = oracle_integrate(f, a, b, 4096) / (b - a);
    const double slop = 1e-10 * (1.0 + std::fabs(mean));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(mean);

    const Interval mid = midpoint_pair(p, c);
    CHECK(mid.lo <= mean + slop);
    CHECK(mid.hi >= mean - slop);
    const Interval trap = trapezoid_pair(p, c);
    CHECK(trap.lo <= mean + slop);
    CHECK(trap.hi >= mean - slop);

    if (c.m >= 0.0) {
      const Interval uj = ujevic_pair(p, c);
      CHECK(uj.lo <= mean + slop);
      CHECK(uj.hi >= mean - slop);
    }

    const Enclosure enc = enclose_panel(p, c, KernelSet{});
    CHECK(enc.bounds.lo <= mean + slop);
    CHECK(enc.bounds.hi >= mean - slop);
    CHECK(enc.certified);
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("ordering chain: midpoint lower never exceeds trapezoid upper") {
  ExprGen gen(1618);
  for (int i = 0; i < 200; ++i) {
    const std::string text = gen.smooth();
    CAPTURE(text);
    const Expr f = Expr::parse(text);
    const double a = gen.uniform(-3.0, 2.5);
    const double b = a + gen.uniform(0.01, 0.5);
    const PanelData p = sample_panel(f, a, b);
    const CurvatureBounds c = bound_curvature(f, Interval(a, b), CurvatureMode::kRigorous, 32);

    const Interval mid = midpoint_pair(p, c);
    const Interval trap = trapezoid_pair(p, c);
    CHECK(mid.lo <= mid.hi);
    CHECK(trap.lo <= trap.hi);
    // Inner chain of the m-side inequalities.
    CHECK(mid.lo <= trap.hi + 1e-12 * (1.0 + std::fabs(trap.hi)));
  }
}

TEST_CASE("kernel set parsing") {
  const KernelSet def = KernelSet::parse("midpoint,trapezoid,auto");
  CHECK(def.midpoint);
  CHECK(def.trapezoid);
  CHECK(!def.ujevic);
  CHECK(!def.classic_hh);
  CHECK(def.auto_shape);
  CHECK(def.to_string() == "midpoint,trapezoid,auto");

  const KernelSet uj = KernelSet::parse(" ujevic , classic_hh ");
  CHECK(uj.ujevic);
  CHECK(uj.classic_hh);
  CHECK(!uj.midpoint);

  CHECK_THROWS_AS(KernelSet::parse(""), ConfigError);
  CHECK_THROWS_AS(KernelSet::parse("midpoínt"), ConfigError);
  CHECK_THROWS_AS(KernelSet::parse("simpson"), ConfigError);
}

TEST_CASE("resolve_kernels applies shape gating") {
  const CurvatureBounds convex = manual_bounds(0.5, 2.0, Interval(0.0, 1.0));
  const CurvatureBounds concave = manual_bounds(-2.0, -0.5, Interval(0.0, 1.0));
  const CurvatureBounds indefinite = manual_bounds(-1.0, 1.0, Interval(0.0, 1.0));

  KernelSet def;
  const KernelSet r1 = resolve_kernels(def, convex);
  CHECK(r1.ujevic);
  CHECK(r1.classic_hh);
  CHECK(!r1.auto_shape);

  const KernelSet r2 = resolve_kernels(def, concave);
  CHECK(!r2.ujevic);
  CHECK(r2.classic_hh);

  const KernelSet r3 = resolve_kernels(def, indefinite);
  CHECK(!r3.ujevic);
  CHECK(!r3.classic_hh);
  CHECK(r3.midpoint);
}

}  // TEST_SUITE
