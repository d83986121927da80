#ifndef FT_WAVE_CURVES_HPP_
#define FT_WAVE_CURVES_HPP_

#include "ft/gas.hpp"

namespace ft {

/// Curves are local objects; beyond this parameter radius we refuse to
/// evaluate them rather than extrapolate.
inline constexpr double kCurveValidityRadius = 0.3;

struct CurveRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Combined vortex-sheet / entropy-wave map:
/// (u, v, p, rho) -> (u e^{a2}, v e^{a2}, p, rho e^{a3}).
GasState phi_contact(double alpha2, double alpha3, const GasState& base);

/// Forward wave-curve map of a genuinely nonlinear family (1 or 4), base
/// being the state below the wave. alpha >= 0 follows the rarefaction
/// integral curve dU/ds = r_j(U); alpha < 0 follows the Hugoniot branch,
/// parameterized so the curve is tangent to r_j(base) at alpha = 0.
GasState phi_gnl(int family, double alpha, const GasState& base,
                 const GasModel& m);

/// Inverse map: returns the below state B with phi_gnl(family, alpha, B) ==
/// above.
GasState psi_gnl(int family, double alpha, const GasState& above,
                 const GasModel& m);

struct CompositeResult {
  GasState above;  // Phi_4(a4; Phi_3(a3; Phi_2(a2; Phi_1(a1; below))))
  GasState mid1;   // Phi_1(a1; below)
  GasState mid2;   // Phi_3(a3; Phi_2(a2; mid1)) == Psi_4(a4; above)
};
CompositeResult phi_composite(const Vec4& alphas, const GasState& below,
                              const GasModel& m);

struct ShockData {
  double slope = 0.0;  // s_j, dy/dx
  GasState below, above;
};

/// Shock branch state and slope at parameter alpha < 0 from the below state.
ShockData shock_from_alpha(int family, double alpha, const GasState& base,
                           const GasModel& m);

/// Rankine-Hugoniot residual (s [W] - [H]) / sqrt(1 + s^2), jump = above -
/// below.
Vec4 rh_residual(const GasState& below, const GasState& above, double slope,
                 const GasModel& m);

/// Slope of the discontinuity joining two Hugoniot-related states; throws
/// SolverError if the residual exceeds 1e-8.
double shock_slope(int family, const GasState& below, const GasState& above,
                   const GasModel& m);

}  // namespace ft

#endif  // FT_WAVE_CURVES_HPP_
