#include "ft/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ft {

namespace {

std::vector<ProtoFront> wave_list(const TrackerState& state) {
  // Everything except the boundary front, already in y-order.
  return {state.fronts.begin() + 1, state.fronts.end()};
}

double raw_strength(const ProtoFront& f) {
  return std::fabs(f.strength) + std::fabs(f.strength2);
}

Front make_front(TrackerState& state, const ProtoFront& pf, double x0,
                 double y0, int generation) {
  Front f;
  static_cast<ProtoFront&>(f) = pf;
  f.id = state.next_id++;
  f.generation = generation;
  f.x0 = x0;
  f.y0 = y0;
  return f;
}

void retire(TrackerState& state, const Front& f, double x1) {
  Segment seg;
  static_cast<Front&>(seg) = f;
  seg.x1 = x1;
  state.history.push_back(seg);
}

int cutoff_from_strength(double total, double delta, double c0eps0) {
  // Smallest N with (4KT)^(N+1) <= delta, K = 1/(4 c0eps0); clamped to
  // [1, 64].
  const double base = total / c0eps0;
  if (!(base > 0.0) || base >= 1.0 || !(delta < 1.0)) return 64;
  const int n =
      static_cast<int>(std::ceil(std::log(delta) / std::log(base))) - 1;
  return std::clamp(n, 1, 64);
}

// Applies the generation cutoff to an outgoing fan. Region values propagate
// from below across removed fronts; if the upmost fronts are removed the
// last survivor's upper flank is rewritten to the fan's top state.
struct RemovalResult {
  std::vector<ProtoFront> kept;
  std::vector<int> generations;
};
RemovalResult apply_removal(TrackerState& state, std::vector<ProtoFront> fan,
                            const std::vector<int>& gens,
                            const GasState& top) {
  const int n = static_cast<int>(fan.size());
  RemovalResult out;
  GasState cur = (n > 0) ? fan[0].below : top;
  int last_kept = -1;
  for (int k = 0; k < n; ++k) {
    if (gens[k] <= state.generation_cutoff) {
      fan[k].below = cur;
      cur = fan[k].above;
      out.kept.push_back(fan[k]);
      out.generations.push_back(gens[k]);
      last_kept = k;
    } else {
      state.removed_strength_total += raw_strength(fan[k]);
    }
  }
  if (last_kept >= 0 && last_kept < n - 1) out.kept.back().above = top;
  return out;
}

}  // namespace

TrackerState initialize(const InitialProfile& profile, const GasModel& model,
                        const TrackerConfig& config) {
  if (profile.states.size() != profile.breakpoints.size() + 1)
    throw std::invalid_argument("profile: states must outnumber breakpoints by one");
  for (size_t i = 1; i < profile.breakpoints.size(); ++i)
    if (!(profile.breakpoints[i] > profile.breakpoints[i - 1]))
      throw std::invalid_argument("profile: breakpoints must increase");
  if (!profile.breakpoints.empty() && !(profile.breakpoints.front() > 0.0))
    throw std::invalid_argument("profile: breakpoints must be positive");

  TrackerState state;
  state.model = model;
  state.config = config;
  state.still_gas = GasState{0.0, 0.0, config.pbar, config.rho_still};
  state.boundary_vertices.push_back({0.0, 0.0});

  // Free-boundary Riemann problem at the corner.
  const BoundaryFan bf =
      solve_free_boundary(profile.states[0], config.pbar, model);
  Front boundary;
  boundary.family = 0;
  boundary.kind = FrontKind::free_boundary;
  boundary.slope = bf.slope;
  boundary.below = state.still_gas;
  boundary.above = bf.middle;
  boundary.generation = 0;
  boundary.id = state.next_id++;
  state.fronts.push_back(boundary);
  for (const ProtoFront& pf :
       split_boundary_fan(bf, config.delta, model).fronts)
    state.fronts.push_back(make_front(state, pf, 0.0, 0.0, 1));

  // Standard Riemann problems at the profile breakpoints.
  for (size_t k = 0; k < profile.breakpoints.size(); ++k) {
    const WaveFan fan =
        solve_standard(profile.states[k], profile.states[k + 1], model);
    for (const ProtoFront& pf : split_fan(fan, config.delta, model).fronts)
      state.fronts.push_back(
          make_front(state, pf, 0.0, profile.breakpoints[k], 1));
  }

  double total = 0.0;
  for (size_t i = 1; i < state.fronts.size(); ++i)
    total += raw_strength(state.fronts[i]);
  state.generation_cutoff =
      cutoff_from_strength(total, config.delta, config.c0eps0);

  record(state.glimm, 0.0, wave_list(state), "initial", 0.0, config.glimm);
  return state;
}

NextEvent next_event(const TrackerState& state, double x_max) {
  NextEvent best;
  best.kind = "none";
  best.x = x_max;
  for (size_t i = 0; i + 1 < state.fronts.size(); ++i) {
    const Front& lo = state.fronts[i];
    const Front& hi = state.fronts[i + 1];
    const double ds = lo.slope - hi.slope;
    // Slopes closer than 1e-10 are parallel at working precision (contacts
    // in one block differ only by round-off); genuine convergence is
    // orders of magnitude faster.
    if (ds <= 1e-10) continue;
    const double xe =
        ((hi.y0 - hi.slope * hi.x0) - (lo.y0 - lo.slope * lo.x0)) / ds;
    if (xe <= state.x + 1e-12 || xe > best.x - 1e-12) continue;
    best.x = xe;
    best.kind = (i == 0) ? "boundary-hit" : "collision";
    best.lower_index = static_cast<int>(i);
    best.upper_index = static_cast<int>(i + 1);
  }
  if (best.lower_index < 0) best.kind = "none";
  return best;
}

void handle_collision(TrackerState& state, const NextEvent& ev) {
  const int i = ev.lower_index;
  Front lower = state.fronts[i];
  Front upper = state.fronts[i + 1];
  const double xe = ev.x;
  const double ye = y_at(lower, xe);

  retire(state, lower, xe);
  retire(state, upper, xe);

  const GasState ul = lower.below;
  const GasState ur = upper.above;
  const WaveFan fan = solve_standard(ul, ur, state.model);
  std::vector<ProtoFront> out =
      split_fan(fan, state.config.delta, state.model).fronts;

  // Generation rule: outgoing fronts of an incoming family inherit that
  // incoming generation (min on a same-family collision); new families get
  // the sum.
  const int m = lower.generation, n = upper.generation;
  std::vector<int> gens(out.size());
  for (size_t k = 0; k < out.size(); ++k) {
    const int fam = out[k].family;
    if (fam == lower.family && fam == upper.family)
      gens[k] = std::min(m, n);
    else if (fam == lower.family)
      gens[k] = m;
    else if (fam == upper.family)
      gens[k] = n;
    else
      gens[k] = m + n;
  }
  const RemovalResult rr = apply_removal(state, std::move(out), gens, ur);

  std::vector<Front> replacement;
  for (size_t k = 0; k < rr.kept.size(); ++k)
    replacement.push_back(
        make_front(state, rr.kept[k], xe, ye, rr.generations[k]));
  if (replacement.empty()) {
    // Whole fan removed: the merged region keeps the lower value, so the
    // upper neighbour's lower flank is rewritten.
    if (i + 2 < static_cast<int>(state.fronts.size()))
      state.fronts[i + 2].below = ul;
  }
  const double product = weighted_strength(lower, state.config.glimm) *
                         weighted_strength(upper, state.config.glimm);
  state.fronts.erase(state.fronts.begin() + i, state.fronts.begin() + i + 2);
  state.fronts.insert(state.fronts.begin() + i, replacement.begin(),
                      replacement.end());

  state.x = xe;
  state.events.push_back({xe, "collision", lower.id, upper.id});
  record(state.glimm, xe, wave_list(state), "collision", product,
         state.config.glimm);
}

void handle_boundary_reflection(TrackerState& state, const NextEvent& ev) {
  if (ev.lower_index != 0)
    throw std::logic_error("boundary reflection must involve fronts[0]");
  Front boundary = state.fronts[0];
  Front incident = state.fronts[1];
  if (incident.family != 1)
    throw std::runtime_error(
        "invariant violation: non-1-family front reached the boundary");
  const double xe = ev.x;
  const double ye = y_at(boundary, xe);

  retire(state, boundary, xe);
  retire(state, incident, xe);

  const BoundaryFan bf =
      solve_free_boundary(incident.above, state.config.pbar, state.model);

  Front nb;
  nb.family = 0;
  nb.kind = FrontKind::free_boundary;
  nb.slope = bf.slope;
  nb.below = state.still_gas;
  nb.above = bf.middle;
  nb.generation = 0;
  nb.id = state.next_id++;
  nb.x0 = xe;
  nb.y0 = ye;
  state.boundary_vertices.push_back({xe, ye});

  std::vector<Front> replacement{nb};
  for (const ProtoFront& pf :
       split_boundary_fan(bf, state.config.delta, state.model).fronts)
    replacement.push_back(make_front(state, pf, xe, ye, incident.generation));

  state.fronts.erase(state.fronts.begin(), state.fronts.begin() + 2);
  state.fronts.insert(state.fronts.begin(), replacement.begin(),
                      replacement.end());

  state.x = xe;
  state.events.push_back({xe, "reflection", incident.id, boundary.id});
  record(state.glimm, xe, wave_list(state), "reflection", 0.0,
         state.config.glimm);
}

void advance(TrackerState& state, double x_max) {
  while (true) {
    if (static_cast<int>(state.events.size()) > state.config.max_events)
      throw std::runtime_error("event-count ceiling exceeded");
    const NextEvent ev = next_event(state, x_max);
    if (ev.kind == "none") break;
    if (ev.kind == "boundary-hit")
      handle_boundary_reflection(state, ev);
    else
      handle_collision(state, ev);
  }
  state.x = x_max;
}

double boundary_at(const TrackerState& state, double x) {
  const auto& v = state.boundary_vertices;
  size_t k = 0;
  while (k + 1 < v.size() && v[k + 1].first <= x) ++k;
  if (k + 1 < v.size()) {
    const double t = (x - v[k].first) / (v[k + 1].first - v[k].first);
    return v[k].second + t * (v[k + 1].second - v[k].second);
  }
  // Beyond the last vertex: the active boundary front.
  return y_at(state.fronts[0], x);
}

Slice state_slice(const TrackerState& state, double x) {
  if (x < 0.0) throw std::out_of_range("slice position before x = 0");
  Slice s;
  s.g = boundary_at(state, x);

  struct Entry {
    double y;
    Segment seg;
  };
  std::vector<Entry> entries;
  for (const Segment& seg : state.history) {
    if (seg.family == 0) continue;
    if (seg.x0 <= x && x < seg.x1) entries.push_back({y_at(seg, x), seg});
  }
  for (size_t i = 1; i < state.fronts.size(); ++i) {
    const Front& f = state.fronts[i];
    if (f.x0 <= x) {
      Segment seg;
      static_cast<Front&>(seg) = f;
      seg.x1 = std::numeric_limits<double>::infinity();
      entries.push_back({y_at(seg, x), seg});
    }
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.y != b.y) return a.y < b.y;
    return a.seg.slope < b.seg.slope;
  });

  // Boundary-adjacent state comes from the active/retired boundary piece.
  GasState bottom = state.fronts[0].above;
  for (const Segment& seg : state.history)
    if (seg.family == 0 && seg.x0 <= x && x < seg.x1) bottom = seg.above;
  if (state.fronts[0].x0 <= x) bottom = state.fronts[0].above;

  s.states.push_back(bottom);
  for (const Entry& e : entries) {
    s.breakpoints.push_back(e.y);
    s.states.push_back(e.seg.above);
    s.segs.push_back(e.seg);
  }
  return s;
}

double last_event_x(const TrackerState& state) {
  return state.events.empty() ? 0.0 : state.events.back().x;
}

}  // namespace ft
