#include "ft/riemann.hpp"

#include <cmath>

#include "ft/numerics.hpp"

namespace ft {

namespace {

double linf(const Vec4& r) {
  double n = 0.0;
  for (double x : r) n = std::max(n, std::fabs(x));
  return n;
}

Vec4 state_diff(const GasState& a, const GasState& b) {
  return {a.u - b.u, a.v - b.v, a.p - b.p, a.rho - b.rho};
}

// Appends the split pieces of one GNL wave between (below, above).
void emit_gnl(std::vector<ProtoFront>& out, int family, double alpha,
              const GasState& below, const GasState& above, double delta,
              const GasModel& m) {
  if (std::fabs(alpha) < kStrengthFloor) return;
  if (alpha < 0.0) {
    ProtoFront f;
    f.family = family;
    f.kind = FrontKind::shock;
    f.strength = alpha;
    f.below = below;
    f.above = above;
    f.slope = shock_slope(family, below, above, m);
    out.push_back(f);
    return;
  }
  int nu = static_cast<int>(std::lround(alpha / delta));
  if (nu < 1) nu = 1;
  const double piece = alpha / nu;
  GasState lo = below;
  for (int k = 1; k <= nu; ++k) {
    GasState hi = (k == nu) ? above : phi_gnl(family, piece, lo, m);
    ProtoFront f;
    f.family = family;
    f.kind = FrontKind::rarefaction_step;
    f.strength = piece;
    f.below = lo;
    f.above = hi;
    f.slope = lambda_gnl(lo, m, family);
    out.push_back(f);
    lo = hi;
  }
}

void emit_contact(std::vector<ProtoFront>& out, double a2, double a3,
                  const GasState& below, const GasState& above) {
  if (std::fabs(a2) + std::fabs(a3) < kStrengthFloor) return;
  ProtoFront f;
  f.family = 2;
  f.kind = FrontKind::contact;
  f.strength = a2;
  f.strength2 = a3;
  f.below = below;
  f.above = above;
  f.slope = contact_slope(below);
  out.push_back(f);
}

}  // namespace

WaveFan solve_standard(const GasState& below, const GasState& above,
                       const GasModel& m) {
  Vec4 a{0.0, 0.0, 0.0, 0.0};
  auto residual = [&](const Vec4& aa) {
    return state_diff(phi_composite(aa, below, m).above, above);
  };
  // Polish to ~1e-13 so downstream strength bookkeeping stays below the
  // Glimm monotonicity tolerance; accept anything below 1e-11.
  Vec4 res = residual(a);
  double rn = linf(res);
  bool converged = rn < 1e-13;
  for (int it = 0; it < 60 && !converged; ++it) {
    std::vector<std::vector<double>> jac(4, std::vector<double>(4));
    for (int c = 0; c < 4; ++c) {
      const double h = 1e-7;
      Vec4 ap = a;
      ap[c] += h;
      const Vec4 rp = residual(ap);
      for (int r = 0; r < 4; ++r) jac[r][c] = (rp[r] - res[r]) / h;
    }
    std::vector<double> step =
        solve_dense(jac, {res[0], res[1], res[2], res[3]});
    double t = 1.0;
    bool moved = false;
    for (int half = 0; half < 25 && !moved; ++half) {
      Vec4 at = a;
      for (int c = 0; c < 4; ++c) at[c] -= t * step[c];
      try {
        const Vec4 rt = residual(at);
        const double rtn = linf(rt);
        if (rtn < rn || rtn < 1e-13) {
          a = at;
          res = rt;
          rn = rtn;
          moved = true;
        }
      } catch (const std::exception&) {
      }
      t *= 0.5;
    }
    converged = rn < 1e-13;
    if (!moved) break;
  }
  if (rn >= 1e-11) throw SolverError("Riemann data out of local range");

  WaveFan fan;
  fan.alphas = a;
  fan.below = below;
  fan.above = above;
  const CompositeResult cr = phi_composite(a, below, m);
  fan.mid1 = cr.mid1;
  fan.mid2 = cr.mid2;
  return fan;
}

BoundaryFan solve_free_boundary(const GasState& above, double pbar,
                                const GasModel& m) {
  // f(a) = (Psi_4(a; above)).p - pbar is strictly decreasing (p increases
  // along the forward 4-curve). Bracket, then safeguarded Newton/bisection.
  auto f = [&](double a) { return psi_gnl(4, a, above, m).p - pbar; };
  const double f0 = f(0.0);
  double lo = 0.0, hi = 0.0;
  if (f0 > 0.0) {
    hi = 1e-3;
    while (f(hi) > 0.0) {
      hi *= 2.0;
      if (hi > kCurveValidityRadius)
        throw CurveRangeError("free-boundary root outside validity radius");
    }
  } else if (f0 < 0.0) {
    lo = -1e-3;
    while (f(lo) < 0.0) {
      lo *= 2.0;
      if (-lo > kCurveValidityRadius)
        throw CurveRangeError("free-boundary root outside validity radius");
    }
    hi = 0.0;
  }
  // Invariant: lo < hi with f(lo) >= 0 >= f(hi) (f is decreasing).
  double a = 0.5 * (lo + hi);
  GasState mid = psi_gnl(4, a, above, m);
  for (int it = 0; it < 200; ++it) {
    const double fa = mid.p - pbar;
    if (std::fabs(fa) < 1e-13) break;
    if (fa > 0.0)
      lo = a;
    else
      hi = a;
    const double h = 1e-7;
    const double df = (f(a + h) - fa) / h;
    double an = a - fa / df;
    if (!(an > std::min(lo, hi)) || !(an < std::max(lo, hi)))
      an = 0.5 * (lo + hi);
    a = an;
    mid = psi_gnl(4, a, above, m);
  }
  if (std::fabs(mid.p - pbar) >= 1e-12)
    throw SolverError("free-boundary pressure match failed");

  BoundaryFan bf;
  bf.alpha4 = a;
  bf.middle = mid;
  bf.slope = mid.v / mid.u;
  bf.above = above;
  return bf;
}

BoundaryFan reflect_at_boundary(const GasState& left, double alpha1,
                                double pbar, const GasModel& m) {
  const GasState um = phi_gnl(1, alpha1, left, m);
  return solve_free_boundary(um, pbar, m);
}

double reflection_coefficient(const GasState& left, const GasModel& m) {
  return -rvec_gnl(left, m, 1)[2] / rvec_gnl(left, m, 4)[2];
}

FrontFan split_fan(const WaveFan& fan, double delta, const GasModel& m) {
  FrontFan out;
  emit_gnl(out.fronts, 1, fan.alphas[0], fan.below, fan.mid1, delta, m);
  emit_contact(out.fronts, fan.alphas[1], fan.alphas[2], fan.mid1, fan.mid2);
  emit_gnl(out.fronts, 4, fan.alphas[3], fan.mid2, fan.above, delta, m);
  return out;
}

FrontFan split_boundary_fan(const BoundaryFan& fan, double delta,
                            const GasModel& m) {
  FrontFan out;
  emit_gnl(out.fronts, 4, fan.alpha4, fan.middle, fan.above, delta, m);
  return out;
}

}  // namespace ft
