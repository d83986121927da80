#ifndef FT_VERIFIER_HPP_
#define FT_VERIFIER_HPP_

#include <string>
#include <vector>

#include "ft/tracker.hpp"

namespace ft {

/// C-infinity bump test function
/// psi(x,y) = B((x-xc)/rx) B((y-yc)/ry), B(t) = exp(-1/(1-t^2)) on |t|<1.
struct BumpTest {
  double xc = 0.0, yc = 0.0, rx = 1.0, ry = 1.0;
  double operator()(double x, double y) const;
};

/// 5x5 grid of bump centers covering [s,t] x [y_lo,y_hi], at two radius
/// scales (50 test functions).
std::vector<BumpTest> default_test_set(double s, double t, double y_lo,
                                       double y_hi);

struct WeakFormReport {
  // Maximum |residual| over the test set for the four conservation
  // integrals, and the maximum (signed) entropy integral value.
  double F = 0.0, G = 0.0, I = 0.0, J = 0.0;
  double E = 0.0;
  int n_tests = 0;
};

/// Residuals of the slab weak form on [s,t]. For piecewise-constant data on
/// a polygonal partition the area integrals telescope to line integrals of
/// psi against each front's flux defect, which is what is evaluated here
/// (exactly equivalent, and free of area-quadrature error).
WeakFormReport weak_form(const TrackerState& state, double s, double t,
                         const std::vector<BumpTest>& tests);

struct FrontAudit {
  int id = 0;
  int family = 0;
  FrontKind kind = FrontKind::shock;
  double strength = 0.0;
  double residual = 0.0;  // max RH defect component (family-specific, below)
  std::string note;
};

/// Per-front jump-condition report over the whole history: RH residual for
/// shocks and rarefaction steps, |[p]| and normal-velocity jump for
/// contacts, |p - pbar| and |v - g'u| for boundary pieces.
std::vector<FrontAudit> rh_audit(const TrackerState& state);

/// Integral over theta in [0, window] of the max-norm state difference in
/// the boundary-straightened coordinate theta = y - g(x).
double l1_distance(const TrackerState& a, const TrackerState& b, double x,
                   double window);

struct AsymptoticReport {
  double x_last_event = 0.0;
  GasState top_state;       // observed topmost state (should be U0 tail)
  GasState predicted_uinf;  // solve_free_boundary(top_state, pbar).middle
  double boundary_slope_tail = 0.0;
  double predicted_slope = 0.0;
  double slope_error = 0.0;
  double boundary_p_error = 0.0;       // |p(boundary-adjacent) - pbar|
  bool far_wave_shock_predicted = false;  // pbar > top-state pressure
  bool far_wave_matches = false;       // remaining 4-front kinds agree
  bool events_pending = false;
};

AsymptoticReport asymptotic_check(const TrackerState& state, double pbar);

struct UniformBounds {
  double max_tv = 0.0;        // sup_x TV(U(x,.))
  double max_linf = 0.0;      // sup_x ||U(x,.) - uplus||_inf
  double max_boundary_slope = 0.0;
};

/// Scans the run between consecutive events (where slices are constant in
/// x) and over boundary segments.
UniformBounds uniform_bounds(const TrackerState& state, const GasState& uplus);

double tv_of_slice(const Slice& s);

}  // namespace ft

#endif  // FT_VERIFIER_HPP_
