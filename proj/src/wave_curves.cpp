#include "ft/wave_curves.hpp"

#include <cmath>
#include <vector>

#include "ft/numerics.hpp"

namespace ft {

namespace {

void check_radius(double alpha) {
  if (std::fabs(alpha) > kCurveValidityRadius)
    throw CurveRangeError("wave-curve parameter outside validity radius");
}

// s [W] - [H] with the jump taken against precomputed reference fluxes.
Vec4 rh_defect(const GasState& s, const GasModel& m, double slope,
               const Vec4& W0, const Vec4& H0) {
  Vec4 W, H;
  fluxes(s, m, W, H);
  Vec4 r;
  for (int i = 0; i < 4; ++i) r[i] = slope * (W[i] - W0[i]) - (H[i] - H0[i]);
  return r;
}

double linf(const Vec4& r) {
  double n = 0.0;
  for (double x : r) n = std::max(n, std::fabs(x));
  return n;
}

// Hugoniot state at prescribed pressure: solves the four RH equations for
// (u, v, rho, slope). Weak shocks only; Newton with a finite-difference
// Jacobian, damped by step halving.
ShockData hugoniot_at_pressure(int family, double p_target,
                               const GasState& base, const GasModel& m) {
  Vec4 W0, H0;
  fluxes(base, m, W0, H0);
  const Vec4 r = rvec_gnl(base, m, family);
  const double dp = p_target - base.p;
  const double a_lin = dp / r[2];  // first-order parameter estimate

  // Unknowns z = (u, v, rho, slope).
  std::vector<double> z = {base.u + a_lin * r[0], base.v + a_lin * r[1],
                           base.rho + a_lin * r[3],
                           lambda_gnl(base, m, family) + 0.5 * a_lin};
  auto residual = [&](const std::vector<double>& zz) {
    GasState s{zz[0], zz[1], p_target, zz[2]};
    if (!(s.rho > 0.0)) throw SolverError("hugoniot: density went negative");
    return rh_defect(s, m, zz[3], W0, H0);
  };

  Vec4 res = residual(z);
  double rn = linf(res);
  for (int it = 0; it < 50 && rn > 1e-13; ++it) {
    std::vector<std::vector<double>> jac(4, std::vector<double>(4));
    for (int c = 0; c < 4; ++c) {
      const double h = 1e-7 * std::max(1.0, std::fabs(z[c]));
      auto zp = z;
      zp[c] += h;
      const Vec4 rp = residual(zp);
      for (int rr = 0; rr < 4; ++rr) jac[rr][c] = (rp[rr] - res[rr]) / h;
    }
    std::vector<double> step =
        solve_dense(jac, {res[0], res[1], res[2], res[3]});
    double t = 1.0;
    for (int half = 0; half < 30; ++half) {
      std::vector<double> zt = z;
      for (int c = 0; c < 4; ++c) zt[c] -= t * step[c];
      try {
        const Vec4 rt = residual(zt);
        const double rtn = linf(rt);
        if (rtn < rn || rtn < 1e-13) {
          z = zt;
          res = rt;
          rn = rtn;
          break;
        }
      } catch (const SolverError&) {
      }
      t *= 0.5;
    }
  }
  if (rn > 1e-11)
    throw SolverError("hugoniot solve failed to converge");

  ShockData sd;
  sd.below = base;
  sd.above = GasState{z[0], z[1], p_target, z[2]};
  sd.slope = z[3];
  return sd;
}

Vec4 rarefaction_rhs(const Vec4& q, const GasModel& m, int family, int sign) {
  GasState s = from_vec(q);
  Vec4 r;
  try {
    r = rvec_gnl(s, m, family);
  } catch (const std::domain_error&) {
    throw CurveRangeError("curve left validity region");
  }
  if (sign < 0)
    for (auto& x : r) x = -x;
  return r;
}

}  // namespace

GasState phi_contact(double alpha2, double alpha3, const GasState& base) {
  const double e2 = std::exp(alpha2);
  return {base.u * e2, base.v * e2, base.p, base.rho * std::exp(alpha3)};
}

GasState phi_gnl(int family, double alpha, const GasState& base,
                 const GasModel& m) {
  check_radius(alpha);
  if (alpha == 0.0) return base;
  if (alpha > 0.0) {
    auto rhs = [&](const Vec4& q) { return rarefaction_rhs(q, m, family, +1); };
    return from_vec(integrate_rk45(rhs, to_vec(base), alpha, 1e-10));
  }
  const double r3 = rvec_gnl(base, m, family)[2];
  return hugoniot_at_pressure(family, base.p + alpha * r3, base, m).above;
}

ShockData shock_from_alpha(int family, double alpha, const GasState& base,
                           const GasModel& m) {
  check_radius(alpha);
  if (!(alpha < 0.0)) throw SolverError("shock branch requires alpha < 0");
  const double r3 = rvec_gnl(base, m, family)[2];
  return hugoniot_at_pressure(family, base.p + alpha * r3, base, m);
}

GasState psi_gnl(int family, double alpha, const GasState& above,
                 const GasModel& m) {
  check_radius(alpha);
  if (alpha == 0.0) return above;
  if (alpha > 0.0) {
    // Inverse of the integral-curve flow: integrate backwards.
    auto rhs = [&](const Vec4& q) { return rarefaction_rhs(q, m, family, -1); };
    return from_vec(integrate_rk45(rhs, to_vec(above), alpha, 1e-10));
  }
  // Shock branch: Newton on the base state so that phi lands on `above`.
  const Vec4 r = rvec_gnl(above, m, family);
  Vec4 z = to_vec(above);
  for (int i = 0; i < 4; ++i) z[i] -= alpha * r[i];
  auto residual = [&](const Vec4& zz) {
    const GasState s = from_vec(zz);
    const GasState up = phi_gnl(family, alpha, s, m);
    Vec4 d;
    const Vec4 uv = to_vec(up), av = to_vec(above);
    for (int i = 0; i < 4; ++i) d[i] = uv[i] - av[i];
    return d;
  };
  Vec4 res = residual(z);
  double rn = linf(res);
  for (int it = 0; it < 50 && rn > 1e-12; ++it) {
    std::vector<std::vector<double>> jac(4, std::vector<double>(4));
    for (int c = 0; c < 4; ++c) {
      const double h = 1e-7 * std::max(1.0, std::fabs(z[c]));
      Vec4 zp = z;
      zp[c] += h;
      const Vec4 rp = residual(zp);
      for (int rr = 0; rr < 4; ++rr) jac[rr][c] = (rp[rr] - res[rr]) / h;
    }
    std::vector<double> step =
        solve_dense(jac, {res[0], res[1], res[2], res[3]});
    double t = 1.0;
    for (int half = 0; half < 30; ++half) {
      Vec4 zt = z;
      for (int c = 0; c < 4; ++c) zt[c] -= t * step[c];
      try {
        const Vec4 rt = residual(zt);
        const double rtn = linf(rt);
        if (rtn < rn || rtn < 1e-12) {
          z = zt;
          res = rt;
          rn = rtn;
          break;
        }
      } catch (const std::exception&) {
      }
      t *= 0.5;
    }
  }
  if (rn > 1e-10) throw SolverError("psi: inverse shock solve diverged");
  return from_vec(z);
}

CompositeResult phi_composite(const Vec4& alphas, const GasState& below,
                              const GasModel& m) {
  CompositeResult cr;
  cr.mid1 = phi_gnl(1, alphas[0], below, m);
  cr.mid2 = phi_contact(alphas[1], alphas[2], cr.mid1);
  cr.above = phi_gnl(4, alphas[3], cr.mid2, m);
  return cr;
}

Vec4 rh_residual(const GasState& below, const GasState& above, double slope,
                 const GasModel& m) {
  Vec4 W0, H0;
  fluxes(below, m, W0, H0);
  Vec4 r = rh_defect(above, m, slope, W0, H0);
  const double nrm = std::sqrt(1.0 + slope * slope);
  for (auto& x : r) x /= nrm;
  return r;
}

double shock_slope(int family, const GasState& below, const GasState& above,
                   const GasModel& m) {
  Vec4 Wb, Hb, Wa, Ha;
  fluxes(below, m, Wb, Hb);
  fluxes(above, m, Wa, Ha);
  Vec4 dW, dH;
  for (int i = 0; i < 4; ++i) {
    dW[i] = Wa[i] - Wb[i];
    dH[i] = Ha[i] - Hb[i];
  }
  // Least-squares slope over the four jump relations; for genuine Hugoniot
  // pairs each component gives the same value.
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 4; ++i) {
    num += dW[i] * dH[i];
    den += dW[i] * dW[i];
  }
  double s;
  if (den > 1e-24) {
    s = num / den;
  } else {
    // Zero-strength limit: fall back to the characteristic slope.
    s = lambda_gnl(below, m, family);
  }
  if (linf(rh_residual(below, above, s, m)) >= 1e-8)
    throw SolverError("states are not Hugoniot-related");
  return s;
}

}  // namespace ft
