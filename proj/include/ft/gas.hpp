#ifndef FT_GAS_HPP_
#define FT_GAS_HPP_

#include <array>
#include <stdexcept>

namespace ft {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

/// Polytropic gas: p = kappa_eos * rho^gamma * exp(S / c_v).
struct GasModel {
  double gamma = 1.4;      // adiabatic exponent, > 1
  double kappa_eos = 1.0;  // entropy-law constant, > 0
  double c_v = 1.0;        // specific heat, > 0
};

/// Primitive flow state U = (u, v, p, rho).
struct GasState {
  double u = 0.0;
  double v = 0.0;
  double p = 0.0;
  double rho = 0.0;
};

inline Vec4 to_vec(const GasState& s) { return {s.u, s.v, s.p, s.rho}; }
inline GasState from_vec(const Vec4& q) { return {q[0], q[1], q[2], q[3]}; }

/// Max-norm distance in (u, v, p, rho).
double max_norm(const GasState& a, const GasState& b);

/// c = sqrt(gamma p / rho). Throws std::domain_error on non-positive p or rho.
double sound_speed(const GasState& s, const GasModel& m);

struct ThermoQuantities {
  double entropy;          // S = c_v ln(p / (kappa rho^gamma))
  double internal_energy;  // e = p / ((gamma-1) rho)
  double total_energy;     // E = (u^2+v^2)/2 + e
  double mach;             // |u| / c
};
ThermoQuantities thermo(const GasState& s, const GasModel& m);

/// Flux vectors of the steady system d_x W(U) + d_y H(U) = 0.
void fluxes(const GasState& s, const GasModel& m, Vec4& W, Vec4& H);

/// Characteristic slope lambda_j (dy/dx) for the genuinely nonlinear
/// families, family in {1, 4}. Requires u > c.
double lambda_gnl(const GasState& s, const GasModel& m, int family);

/// Slope of the linearly degenerate families (2 and 3): v / u.
inline double contact_slope(const GasState& s) { return s.v / s.u; }

/// Gradient of lambda_j with respect to (u, v, p, rho), family in {1, 4}.
/// Computed by implicit differentiation of (v - lambda u)^2 = c^2 (1+lambda^2).
Vec4 grad_lambda(const GasState& s, const GasModel& m, int family);

/// Right eigenvector of family 1 or 4, normalized so r . grad(lambda) = 1.
Vec4 rvec_gnl(const GasState& s, const GasModel& m, int family);

struct EigenSystem {
  std::array<double, 4> lambda;  // lambda_1 <= lambda_2 = lambda_3 <= lambda_4
  std::array<Vec4, 4> rvec;      // right eigenvectors in (u,v,p,rho)
  double kappa1 = 0.0;           // normalization factors for families 1, 4
  double kappa4 = 0.0;
};

/// Full eigensystem at a state with u > c. Throws std::domain_error
/// ("not x-hyperbolic") otherwise.
EigenSystem eigensystem(const GasState& s, const GasModel& m);

inline bool is_supersonic_x(const GasState& s, const GasModel& m) {
  return s.u > sound_speed(s, m);
}

}  // namespace ft

#endif  // FT_GAS_HPP_
