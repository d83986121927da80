#ifndef FT_APP_HPP_
#define FT_APP_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ft/tracker.hpp"
#include "ft/verifier.hpp"

namespace ft {

/// Flat key=value run configuration. Velocities, pressure, and density are
/// nondimensional; lengths are in units of the inflow height scale.
struct RunConfig {
  GasModel gas;
  double ubar = 2.0;       // background x-velocity above the boundary
  double pbar = 1.0;       // common background pressure
  double rho_plus = 1.0;   // background density above
  double rho_minus = 1.0;  // still-gas density below (inert)

  std::string profile = "random";  // "random" | "explicit" | "none"
  double epsilon = 0.01;           // total BV of the random perturbation
  int n_waves = 6;                 // random breakpoint count
  double y_support = 4.0;          // random breakpoints lie in (0, y_support]
  std::uint64_t seed = 1;
  std::vector<double> breakpoints;  // explicit profile
  std::vector<GasState> states;     // explicit profile (breakpoints+1)

  std::vector<double> deltas{0.01};
  double x_max = 20.0;
  double kappa_glimm = 40.0;
  double kplus = 0.0;  // 0 = auto: 2.5 x max measured |K2| near the background
  double c0eps0 = 0.25;
  int max_events = 200000;
  std::vector<double> slice_xs;  // extra profile exports
  double l1_window = 0.0;        // 0 = auto
};

GasState background_state(const RunConfig& cfg);  // (ubar, 0, pbar, rho_plus)

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Builds the initial data: explicit states, or a seeded BV perturbation of
/// the background with total variation epsilon (tail state becomes U0).
InitialProfile build_profile(const RunConfig& cfg);

/// Fully-resolved knobs for one delta.
TrackerConfig tracker_config(const RunConfig& cfg, double delta);

struct RunResult {
  TrackerState state;
  WeakFormReport weak;
  UniformBounds bounds;
  AsymptoticReport asym;
  double max_shock_rh = 0.0;    // worst shock/boundary/contact residual
  double max_step_rh = 0.0;     // worst rarefaction-step residual
  double measured_k2_max = 0.0;
};

RunResult run_once(const RunConfig& cfg, double delta);

/// Artifact writers (deterministic %.17g formatting).
void write_fronts_csv(const TrackerState& s, const std::string& path);
void write_boundary_csv(const TrackerState& s, const std::string& path);
void write_glimm_csv(const TrackerState& s, const std::string& path);
void write_slice_csv(const TrackerState& s, double x, const std::string& path);
void write_reports_json(const RunResult& r, const RunConfig& cfg,
                        const std::string& path);

/// Full solution state, sufficient to re-run the verifier.
void save_solution(const RunResult& r, const RunConfig& cfg,
                   const std::string& path);
struct LoadedSolution {
  RunConfig cfg;
  TrackerState state;
};
LoadedSolution load_solution(const std::string& path);

struct StudyRow {
  double delta = 0.0;
  double weak_max = 0.0;  // max conservation residual over the test set
  double entropy = 0.0;
  int events = 0;
};
struct StudyResult {
  std::vector<StudyRow> rows;
  std::vector<double> l1_pairs;       // consecutive-delta L1 distances
  std::vector<double> g_sup_pairs;    // consecutive sup|g_a - g_b|
  double slope = 0.0;                 // log-log fit of weak_max vs delta
};
StudyResult convergence_study(const RunConfig& cfg,
                              const std::string& out_dir);

}  // namespace ft

#endif  // FT_APP_HPP_
