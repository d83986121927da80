#ifndef FT_TRACKER_HPP_
#define FT_TRACKER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ft/glimm.hpp"
#include "ft/riemann.hpp"

namespace ft {

/// Live front: a ProtoFront anchored at its birth point. family 0 marks the
/// free boundary (below = still-gas tag, above = boundary-adjacent state).
struct Front : ProtoFront {
  int id = 0;
  int generation = 1;  // 0 for the boundary front
  double x0 = 0.0, y0 = 0.0;
};

inline double y_at(const Front& f, double x) {
  return f.y0 + f.slope * (x - f.x0);
}

/// Retired straight piece of a front's trajectory, kept for slicing/export.
struct Segment : Front {
  double x1 = 0.0;  // valid on [x0, x1)
};

struct InitialProfile {
  std::vector<double> breakpoints;  // strictly increasing, > 0
  std::vector<GasState> states;     // breakpoints.size() + 1 entries;
                                    // states.back() is the constant tail
};

struct TrackerConfig {
  double delta = 0.01;
  double pbar = 1.0;
  double rho_still = 1.0;  // still-gas density below the boundary (inert)
  double c0eps0 = 0.25;     // fixes K = 1/(4 c0eps0) in the generation cutoff
  int max_events = 200000;  // finiteness guard
  GlimmConfig glimm;
};

struct TrackerEvent {
  double x = 0.0;
  std::string kind;  // "collision" | "reflection"
  int id_a = 0, id_b = 0;
};

struct TrackerState {
  GasModel model;
  TrackerConfig config;
  double x = 0.0;
  std::vector<Front> fronts;  // y-ordered at current x; fronts[0] = boundary
  std::vector<Segment> history;
  std::vector<std::pair<double, double>> boundary_vertices;  // (x, g(x))
  std::vector<TrackerEvent> events;
  GlimmHistory glimm;
  GasState still_gas;  // inert below-boundary tag
  int generation_cutoff = 1;
  double removed_strength_total = 0.0;
  int next_id = 1;
};

struct NextEvent {
  double x = 0.0;
  std::string kind;  // "collision" | "boundary-hit" | "none"
  int lower_index = -1;
  int upper_index = -1;
};

struct Slice {
  double g = 0.0;                   // boundary position at x
  std::vector<double> breakpoints;  // front y-positions above the boundary
  std::vector<GasState> states;  // states.size() == breakpoints.size()+1;
                                 // states[0] adjacent to the boundary
  std::vector<Segment> segs;     // segment per breakpoint (same order)
};

TrackerState initialize(const InitialProfile& profile, const GasModel& model,
                        const TrackerConfig& config);

NextEvent next_event(const TrackerState& state, double x_max);

void handle_collision(TrackerState& state, const NextEvent& ev);
void handle_boundary_reflection(TrackerState& state, const NextEvent& ev);

/// Runs the event loop up to x_max; Glimm records are appended after every
/// event. Throws if the event-count guard trips or a solver fails.
void advance(TrackerState& state, double x_max);

/// Boundary position g(x).
double boundary_at(const TrackerState& state, double x);

/// Piecewise-constant vertical profile at x (which must be <= state.x or
/// within the straight continuation of the current fronts).
Slice state_slice(const TrackerState& state, double x);

/// x-coordinate of the last event (0 if none).
double last_event_x(const TrackerState& state);

}  // namespace ft

#endif  // FT_TRACKER_HPP_
