#ifndef FT_RIEMANN_HPP_
#define FT_RIEMANN_HPP_

#include <vector>

#include "ft/wave_curves.hpp"

namespace ft {

enum class FrontKind { shock, rarefaction_step, contact, free_boundary };

/// Four-wave solution of a two-state Riemann problem:
/// above = Phi_4(a4; Phi_3(a3; Phi_2(a2; Phi_1(a1; below)))).
struct WaveFan {
  Vec4 alphas{};
  GasState below, above;
  GasState mid1, mid2;  // after the 1-wave / after the contacts
};

/// Single 4-wave solution of the free-boundary Riemann problem.
struct BoundaryFan {
  double alpha4 = 0.0;
  GasState middle;     // U*: boundary-adjacent state, middle.p = pbar
  double slope = 0.0;  // k = v*/u*, the new boundary slope
  GasState above;      // the given upper state
};

/// One straight-line discontinuity before it is placed in the tracker.
/// Contacts carry the (alpha2, alpha3) pair; all others use strength only.
struct ProtoFront {
  double slope = 0.0;
  int family = 0;  // 1 or 4 for GNL fronts, 2 for the merged contact
  FrontKind kind = FrontKind::shock;
  double strength = 0.0;
  double strength2 = 0.0;  // alpha3 for contacts, unused otherwise
  GasState below, above;
};

/// Outgoing fronts of a solved Riemann problem, slopes strictly increasing.
struct FrontFan {
  std::vector<ProtoFront> fronts;
};

/// Fronts weaker than this are numerical zeros and are not emitted.  Kept
/// well above the Riemann solver's residual noise (~1e-11) and well below
/// any physical strength (O(delta)).
inline constexpr double kStrengthFloor = 1e-9;

/// Solves Phi(a4,a3,a2,a1; below) = above by damped Newton; residual < 1e-10.
WaveFan solve_standard(const GasState& below, const GasState& above,
                       const GasModel& m);

/// Single 4-wave against still gas at pressure pbar: finds alpha4 with
/// (Psi_4(alpha4; above)).p == pbar to 1e-13.
BoundaryFan solve_free_boundary(const GasState& above, double pbar,
                                const GasModel& m);

/// Incident 1-wave of strength alpha1 with below-state `left` on the
/// boundary: computes the reflected 4-wave. Returns the boundary fan of the
/// post-reflection state (alpha4, U*, k).
BoundaryFan reflect_at_boundary(const GasState& left, double alpha1,
                                double pbar, const GasModel& m);

/// K2 = -(r_1(left))^(3) / (r_4(left))^(3); satisfies
/// alpha4 = -K2 alpha1 + O(alpha1^2) for reflections off `left`.
double reflection_coefficient(const GasState& left, const GasModel& m);

/// Delta-approximate splitter: rarefactions become fans of nu steps (nu the
/// nearest integer to alpha/delta, at least 1), each step at the
/// characteristic slope of its lower state; shocks and contacts stay single
/// fronts.
FrontFan split_fan(const WaveFan& fan, double delta, const GasModel& m);
FrontFan split_boundary_fan(const BoundaryFan& fan, double delta,
                            const GasModel& m);

}  // namespace ft

#endif  // FT_RIEMANN_HPP_
