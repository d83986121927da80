#include "ft/gas.hpp"

#include <algorithm>
#include <cmath>

namespace ft {

double max_norm(const GasState& a, const GasState& b) {
  return std::max(std::max(std::fabs(a.u - b.u), std::fabs(a.v - b.v)),
                  std::max(std::fabs(a.p - b.p), std::fabs(a.rho - b.rho)));
}

double sound_speed(const GasState& s, const GasModel& m) {
  if (!(s.p > 0.0) || !(s.rho > 0.0))
    throw std::domain_error("gas state with non-positive pressure or density");
  return std::sqrt(m.gamma * s.p / s.rho);
}

ThermoQuantities thermo(const GasState& s, const GasModel& m) {
  const double c = sound_speed(s, m);
  ThermoQuantities t;
  t.entropy = m.c_v * std::log(s.p / (m.kappa_eos * std::pow(s.rho, m.gamma)));
  t.internal_energy = s.p / ((m.gamma - 1.0) * s.rho);
  t.total_energy = 0.5 * (s.u * s.u + s.v * s.v) + t.internal_energy;
  t.mach = std::sqrt(s.u * s.u + s.v * s.v) / c;
  return t;
}

void fluxes(const GasState& s, const GasModel& m, Vec4& W, Vec4& H) {
  // Stagnation enthalpy per unit mass: gamma p / ((gamma-1) rho) + q^2/2.
  const double h0 = m.gamma * s.p / ((m.gamma - 1.0) * s.rho) +
                    0.5 * (s.u * s.u + s.v * s.v);
  W = {s.rho * s.u, s.rho * s.u * s.u + s.p, s.rho * s.u * s.v,
       s.rho * s.u * h0};
  H = {s.rho * s.v, s.rho * s.u * s.v, s.rho * s.v * s.v + s.p,
       s.rho * s.v * h0};
}

double lambda_gnl(const GasState& s, const GasModel& m, int family) {
  const double c = sound_speed(s, m);
  if (!(s.u > c)) throw std::domain_error("not x-hyperbolic: u <= c");
  const double c2 = c * c;
  const double q2 = s.u * s.u + s.v * s.v;
  const double disc = std::sqrt(q2 - c2);
  const double sign = (family == 1) ? -1.0 : 1.0;
  return (s.u * s.v + sign * c * disc) / (s.u * s.u - c2);
}

Vec4 grad_lambda(const GasState& s, const GasModel& m, int family) {
  // F(lambda, U) = (v - lambda u)^2 - c^2 (1 + lambda^2) = 0,
  // grad lambda = -F_U / F_lambda with c^2 = gamma p / rho.
  const double c2 = m.gamma * s.p / s.rho;
  const double lam = lambda_gnl(s, m, family);
  const double w = s.v - lam * s.u;
  const double f_lam = -2.0 * s.u * w - 2.0 * c2 * lam;
  const double f_u = -2.0 * lam * w;
  const double f_v = 2.0 * w;
  const double f_c2 = -(1.0 + lam * lam);
  const double f_p = f_c2 * (m.gamma / s.rho);
  const double f_rho = f_c2 * (-c2 / s.rho);
  return {-f_u / f_lam, -f_v / f_lam, -f_p / f_lam, -f_rho / f_lam};
}

Vec4 rvec_gnl(const GasState& s, const GasModel& m, int family) {
  const double c2 = m.gamma * s.p / s.rho;
  const double lam = lambda_gnl(s, m, family);
  const double mflux = s.rho * (lam * s.u - s.v);
  Vec4 r = {-lam, 1.0, mflux, mflux / c2};
  const Vec4 g = grad_lambda(s, m, family);
  const double dot = r[0] * g[0] + r[1] * g[1] + r[2] * g[2] + r[3] * g[3];
  const double kappa = 1.0 / dot;
  for (auto& x : r) x *= kappa;
  return r;
}

EigenSystem eigensystem(const GasState& s, const GasModel& m) {
  EigenSystem es;
  es.lambda[0] = lambda_gnl(s, m, 1);
  es.lambda[1] = es.lambda[2] = contact_slope(s);
  es.lambda[3] = lambda_gnl(s, m, 4);
  es.rvec[0] = rvec_gnl(s, m, 1);
  es.rvec[1] = {s.u, s.v, 0.0, 0.0};
  es.rvec[2] = {0.0, 0.0, 0.0, s.rho};
  es.rvec[3] = rvec_gnl(s, m, 4);
  // kappa_j = (normalized second component), since the raw eigenvector has 1 there.
  es.kappa1 = es.rvec[0][1];
  es.kappa4 = es.rvec[3][1];
  return es;
}

}  // namespace ft
