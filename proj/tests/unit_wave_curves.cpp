#include <cmath>

#include <doctest.h>

#include "ft/wave_curves.hpp"

using namespace ft;

namespace {
const GasModel kModel{};
const GasState kUplus{2.0, 0.0, 1.0, 1.0};

double linf(const Vec4& r) {
  double n = 0.0;
  for (double x : r) n = std::max(n, std::fabs(x));
  return n;
}
}  // namespace

TEST_CASE("contact map") {
  const GasState id = phi_contact(0.0, 0.0, kUplus);
  CHECK(max_norm(id, kUplus) == 0.0);

  const GasState vs = phi_contact(0.1, 0.0, kUplus);
  CHECK(vs.u == doctest::Approx(2.0 * std::exp(0.1)).epsilon(1e-12));
  CHECK(vs.v == 0.0);
  CHECK(vs.p == 1.0);
  CHECK(vs.rho == 1.0);

  const GasState ew = phi_contact(0.0, 0.2, kUplus);
  CHECK(ew.rho == doctest::Approx(std::exp(0.2)).epsilon(1e-12));
  CHECK(ew.u == 2.0);

  // Contacts preserve p and the streamline direction v/u.
  const GasState base{2.0, 0.3, 1.02, 0.98};
  const GasState c = phi_contact(0.07, -0.04, base);
  CHECK(c.p == base.p);
  CHECK(c.v / c.u == doctest::Approx(base.v / base.u).epsilon(1e-14));
}

TEST_CASE("rarefaction branch advances lambda by exactly alpha") {
  for (int fam : {1, 4}) {
    const double a = 0.05;
    const GasState up = phi_gnl(fam, a, kUplus, kModel);
    CHECK(lambda_gnl(up, kModel, fam) - lambda_gnl(kUplus, kModel, fam) ==
          doctest::Approx(a).epsilon(1e-8));
  }
  CHECK(max_norm(phi_gnl(4, 0.0, kUplus, kModel), kUplus) == 0.0);
}

TEST_CASE("rarefaction branch monotonicity and differential relations") {
  // Along R_j, p and rho move together; the family fixes the direction:
  // family 1 expands upward in alpha, family 4 compresses upward (the
  // upstream side of a 4-wave is the upper one).
  const GasState r1 = phi_gnl(1, 0.1, kUplus, kModel);
  CHECK(r1.p < 1.0);
  CHECK(r1.rho < 1.0);
  const GasState r4 = phi_gnl(4, 0.1, kUplus, kModel);
  CHECK(r4.p > 1.0);
  CHECK(r4.rho > 1.0);

  // dp = c^2 drho, du = -lambda dv, rho (lambda u - v) dv = dp along the
  // integral curve, checked with a small step.
  for (int fam : {1, 4}) {
    const double h = 1e-5;
    const GasState s2 = phi_gnl(fam, h, kUplus, kModel);
    const double c2 = kModel.gamma * kUplus.p / kUplus.rho;
    const double lam = lambda_gnl(kUplus, kModel, fam);
    const double dp = s2.p - kUplus.p, drho = s2.rho - kUplus.rho;
    const double du = s2.u - kUplus.u, dv = s2.v - kUplus.v;
    CHECK(dp == doctest::Approx(c2 * drho).epsilon(1e-3));
    CHECK(du == doctest::Approx(-lam * dv).epsilon(1e-3));
    CHECK(kUplus.rho * (lam * kUplus.u - kUplus.v) * dv ==
          doctest::Approx(dp).epsilon(1e-3));
  }
}

TEST_CASE("shock branch satisfies Rankine-Hugoniot and compresses") {
  const GasState s1 = phi_gnl(1, -0.05, kUplus, kModel);
  // Family 1: downstream is above, so the shock raises p and rho above.
  CHECK(s1.p > 1.0);
  CHECK(s1.rho > 1.0);
  const ShockData sd1 = shock_from_alpha(1, -0.05, kUplus, kModel);
  CHECK(linf(rh_residual(sd1.below, sd1.above, sd1.slope, kModel)) < 1e-8);

  // Family 4: downstream is below; alpha < 0 lowers p above.
  const ShockData sd4 = shock_from_alpha(4, -0.05, kUplus, kModel);
  CHECK(sd4.above.p < 1.0);
  CHECK(linf(rh_residual(sd4.below, sd4.above, sd4.slope, kModel)) < 1e-8);

  // Lax inequalities: slope between the characteristic slopes of the
  // flanks, with the below state on the fast side.
  CHECK(sd4.slope < lambda_gnl(sd4.below, kModel, 4));
  CHECK(sd4.slope > lambda_gnl(sd4.above, kModel, 4));
  CHECK(sd1.slope < lambda_gnl(sd1.below, kModel, 1));
  CHECK(sd1.slope > lambda_gnl(sd1.above, kModel, 1));
}

TEST_CASE("wave-curve tangent is the unit eigenvector on both branches") {
  for (int fam : {1, 4}) {
    const Vec4 r = rvec_gnl(kUplus, kModel, fam);
    const double h = 1e-5;
    const GasState up = phi_gnl(fam, h, kUplus, kModel);
    const GasState dn = phi_gnl(fam, -h, kUplus, kModel);
    const Vec4 qu = to_vec(up), qd = to_vec(dn);
    for (int c = 0; c < 4; ++c) {
      const double fd = (qu[c] - qd[c]) / (2.0 * h);
      CHECK(fd == doctest::Approx(r[c]).epsilon(2e-4).scale(1.0));
    }
  }
}

TEST_CASE("psi inverts phi") {
  for (int fam : {1, 4}) {
    for (double a : {0.03, -0.04}) {
      const GasState above = phi_gnl(fam, a, kUplus, kModel);
      const GasState back = psi_gnl(fam, a, above, kModel);
      CHECK(max_norm(back, kUplus) < 1e-9);
      const GasState fwd = phi_gnl(fam, a, psi_gnl(fam, a, kUplus, kModel),
                                   kModel);
      CHECK(max_norm(fwd, kUplus) < 1e-9);
    }
  }

  // dPsi_4/dalpha at 0 is -r_4(above).
  const Vec4 r = rvec_gnl(kUplus, kModel, 4);
  const double h = 1e-5;
  const Vec4 qp = to_vec(psi_gnl(4, h, kUplus, kModel));
  const Vec4 qm = to_vec(psi_gnl(4, -h, kUplus, kModel));
  for (int c = 0; c < 4; ++c)
    CHECK((qp[c] - qm[c]) / (2.0 * h) ==
          doctest::Approx(-r[c]).epsilon(2e-4).scale(1.0));
}

TEST_CASE("composite map and its partial derivatives") {
  const CompositeResult cid =
      phi_composite({0.0, 0.0, 0.0, 0.0}, kUplus, kModel);
  CHECK(max_norm(cid.above, kUplus) == 0.0);
  CHECK(max_norm(cid.mid1, kUplus) == 0.0);

  const CompositeResult cv =
      phi_composite({0.0, 0.1, 0.0, 0.0}, kUplus, kModel);
  CHECK(max_norm(cv.above, phi_contact(0.1, 0.0, kUplus)) < 1e-14);

  for (int j = 0; j < 4; ++j) {
    const Vec4 r = (j == 0)   ? rvec_gnl(kUplus, kModel, 1)
                   : (j == 1) ? Vec4{kUplus.u, kUplus.v, 0.0, 0.0}
                   : (j == 2) ? Vec4{0.0, 0.0, 0.0, kUplus.rho}
                              : rvec_gnl(kUplus, kModel, 4);
    const double h = 1e-5;
    Vec4 ap{0, 0, 0, 0}, am{0, 0, 0, 0};
    ap[j] = h;
    am[j] = -h;
    const Vec4 qp = to_vec(phi_composite(ap, kUplus, kModel).above);
    const Vec4 qm = to_vec(phi_composite(am, kUplus, kModel).above);
    for (int c = 0; c < 4; ++c)
      CHECK((qp[c] - qm[c]) / (2.0 * h) ==
            doctest::Approx(r[c]).epsilon(1e-4).scale(1.0));
  }
}

TEST_CASE("shock slope weak limit and the expansion-side Hugoniot") {
  // Zero-strength limit: slope tends to the characteristic slope.
  const ShockData weak = shock_from_alpha(4, -1e-6, kUplus, kModel);
  CHECK(weak.slope ==
        doctest::Approx(lambda_gnl(kUplus, kModel, 4)).epsilon(1e-5));

  // A family-4 Hugoniot state through U+ with rho_above = 1.05 lies on the
  // rho-increasing side and its slope exceeds lambda_4(U+). Build it by
  // mirroring a family-1 shock (v -> -v maps the families onto each other;
  // U+ has v = 0 so the base is fixed).
  double lo = -0.2, hi = -1e-4;
  ShockData sd = shock_from_alpha(1, lo, kUplus, kModel);
  REQUIRE(sd.above.rho > 1.05);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    sd = shock_from_alpha(1, mid, kUplus, kModel);
    (sd.above.rho > 1.05 ? lo : hi) = mid;
  }
  CHECK(sd.above.rho == doctest::Approx(1.05).epsilon(1e-6));
  const GasState mirrored{sd.above.u, -sd.above.v, sd.above.p, sd.above.rho};
  const double s4 = shock_slope(4, kUplus, mirrored, kModel);
  CHECK(s4 == doctest::Approx(-sd.slope).epsilon(1e-10));
  CHECK(s4 > lambda_gnl(kUplus, kModel, 4));

  // A generic nearby state is not connected by any single discontinuity.
  CHECK_THROWS_AS(shock_slope(4, kUplus, {2.1, 0.05, 1.1, 1.05}, kModel),
                  SolverError);
}

TEST_CASE("strength/state norm equivalence") {
  // |U+ - U-| comparable to total strength for composite data.
  double ratio_lo = 1e9, ratio_hi = 0.0;
  const Vec4 sets[3] = {{0.05, -0.03, 0.02, -0.04},
                        {-0.02, 0.05, 0.01, 0.03},
                        {0.01, 0.01, -0.06, 0.05}};
  for (const Vec4& a : sets) {
    const CompositeResult cr = phi_composite(a, kUplus, kModel);
    double total = 0.0;
    for (double x : a) total += std::fabs(x);
    const double dist = max_norm(cr.above, kUplus);
    ratio_lo = std::min(ratio_lo, dist / total);
    ratio_hi = std::max(ratio_hi, dist / total);
  }
  CHECK(ratio_lo > 0.1);
  CHECK(ratio_hi < 10.0);
}

TEST_CASE("validity radius is enforced") {
  CHECK_THROWS_AS(phi_gnl(4, 0.31, kUplus, kModel), CurveRangeError);
  CHECK_THROWS_AS(psi_gnl(1, -0.5, kUplus, kModel), CurveRangeError);
}
