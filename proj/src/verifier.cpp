#include "ft/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ft {

namespace {

double bump1(double t) {
  const double t2 = t * t;
  if (t2 >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - t2));
}

// 6-point Gauss-Legendre on [-1, 1].
constexpr double kGx[6] = {-0.9324695142031521, -0.6612093864662645,
                           -0.2386191860831969, 0.2386191860831969,
                           0.6612093864662645,  0.9324695142031521};
constexpr double kGw[6] = {0.1713244923791704, 0.3607615730481386,
                           0.4679139345726910, 0.4679139345726910,
                           0.3607615730481386, 0.1713244923791704};

// Composite 6-point Gauss with panel width <= w.
template <class F>
double integrate_1d(const F& f, double a, double b, double w) {
  if (!(b > a)) return 0.0;
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / w)));
  const double h = (b - a) / n;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double mid = a + (k + 0.5) * h;
    for (int q = 0; q < 6; ++q)
      sum += kGw[q] * f(mid + 0.5 * h * kGx[q]);
    // weight scaling applied after the loop
  }
  return sum * 0.5 * h;
}

struct Edge {
  // Line y = y0 + slope (x - x0), valid on [xa, xb].
  double x0, y0, slope, xa, xb;
  // Constant defect per weak-form component: slope*[W]-[H] (+ Gamma terms
  // on the boundary edge); index 4 is the entropy flux defect.
  double defect[5];
};

void flux_with_entropy(const GasState& s, const GasModel& m, Vec4& W, Vec4& H,
                       double& ws, double& hs) {
  fluxes(s, m, W, H);
  const double S = thermo(s, m).entropy;
  ws = s.rho * s.u * S;
  hs = s.rho * s.v * S;
}

}  // namespace

double BumpTest::operator()(double x, double y) const {
  return bump1((x - xc) / rx) * bump1((y - yc) / ry);
}

std::vector<BumpTest> default_test_set(double s, double t, double y_lo,
                                       double y_hi) {
  std::vector<BumpTest> out;
  const double lx = t - s, ly = y_hi - y_lo;
  for (double scale : {0.45, 0.22}) {
    const double rx = scale * lx, ry = scale * ly;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        BumpTest b;
        b.xc = s + (i + 0.5) * lx / 5.0;
        b.yc = y_lo + (j + 0.5) * ly / 5.0;
        b.rx = rx;
        b.ry = ry;
        out.push_back(b);
      }
    }
  }
  return out;
}

WeakFormReport weak_form(const TrackerState& state, double s, double t,
                         const std::vector<BumpTest>& tests) {
  const GasModel& m = state.model;
  const double pbar = state.config.pbar;

  // Slab partition at event x-coordinates: fronts are straight inside each
  // piece and the slice there is constant.
  std::set<double> cuts{s, t};
  for (const TrackerEvent& ev : state.events)
    if (ev.x > s && ev.x < t) cuts.insert(ev.x);
  std::vector<double> xs(cuts.begin(), cuts.end());

  std::vector<Edge> edges;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const double a = xs[i], b = xs[i + 1];
    if (!(b - a > 1e-13)) continue;
    const Slice sl = state_slice(state, 0.5 * (a + b));

    // Boundary edge: flux defect of the bottom cell against still gas plus
    // the prescribed Gamma data (p-bar on a line of slope g').
    {
      Edge e;
      const double ga = boundary_at(state, a);
      const double gb = boundary_at(state, b);
      e.x0 = a;
      e.y0 = ga;
      e.slope = (gb - ga) / (b - a);
      e.xa = a;
      e.xb = b;
      Vec4 W, H;
      double ws, hs;
      flux_with_entropy(sl.states[0], m, W, H, ws, hs);
      for (int c = 0; c < 4; ++c) e.defect[c] = e.slope * W[c] - H[c];
      e.defect[1] -= pbar * e.slope;  // -pbar int psi n1 ds
      e.defect[2] += pbar;            // -pbar int psi n2 ds
      e.defect[4] = e.slope * ws - hs;
      edges.push_back(e);
    }

    for (size_t k = 0; k < sl.breakpoints.size(); ++k) {
      Edge e;
      const Segment& seg = sl.segs[k];
      e.x0 = seg.x0;
      e.y0 = seg.y0;
      e.slope = seg.slope;
      e.xa = a;
      e.xb = b;
      Vec4 Wl, Hl, Wu, Hu;
      double wsl, hsl, wsu, hsu;
      flux_with_entropy(sl.states[k], m, Wl, Hl, wsl, hsl);
      flux_with_entropy(sl.states[k + 1], m, Wu, Hu, wsu, hsu);
      double mag = 0.0;
      for (int c = 0; c < 4; ++c) {
        e.defect[c] = e.slope * (Wu[c] - Wl[c]) - (Hu[c] - Hl[c]);
        mag = std::max(mag, std::fabs(e.defect[c]));
      }
      e.defect[4] = e.slope * (wsu - wsl) - (hsu - hsl);
      mag = std::max(mag, std::fabs(e.defect[4]));
      if (mag > 0.0) edges.push_back(e);
    }
  }

  WeakFormReport rep;
  rep.n_tests = static_cast<int>(tests.size());
  for (const BumpTest& psi : tests) {
    double acc[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
    const double w = std::min(psi.rx, psi.ry) / 3.0;
    for (const Edge& e : edges) {
      const double a = std::max(e.xa, psi.xc - psi.rx);
      const double b = std::min(e.xb, psi.xc + psi.rx);
      if (!(b > a)) continue;
      for (int c = 0; c < 5; ++c) {
        if (e.defect[c] == 0.0) continue;
        const double val = integrate_1d(
            [&](double x) {
              return psi(x, e.y0 + e.slope * (x - e.x0));
            },
            a, b, w);
        acc[c] += e.defect[c] * val;
      }
    }
    rep.F = std::max(rep.F, std::fabs(acc[0]));
    rep.G = std::max(rep.G, std::fabs(acc[1]));
    rep.I = std::max(rep.I, std::fabs(acc[2]));
    rep.J = std::max(rep.J, std::fabs(acc[3]));
    rep.E = std::max(rep.E, acc[4]);
  }
  return rep;
}

namespace {

void audit_one(const Segment& seg, const TrackerState& state,
               std::vector<FrontAudit>& out) {
  FrontAudit a;
  a.id = seg.id;
  a.family = seg.family;
  a.kind = seg.kind;
  a.strength = seg.strength;
  const GasModel& m = state.model;
  if (seg.family == 0) {
    a.residual = std::max(std::fabs(seg.above.p - state.config.pbar),
                          std::fabs(seg.above.v - seg.slope * seg.above.u));
    a.note = "boundary";
  } else if (seg.kind == FrontKind::contact) {
    const double nrm = std::sqrt(1.0 + seg.slope * seg.slope);
    const double unb = (seg.slope * seg.below.u - seg.below.v) / nrm;
    const double una = (seg.slope * seg.above.u - seg.above.v) / nrm;
    a.residual = std::max(std::fabs(seg.above.p - seg.below.p),
                          std::max(std::fabs(unb), std::fabs(una)));
    a.note = "contact";
  } else {
    const Vec4 r = rh_residual(seg.below, seg.above, seg.slope, m);
    for (double x : r) a.residual = std::max(a.residual, std::fabs(x));
    a.note =
        (seg.kind == FrontKind::shock) ? "shock" : "rarefaction-step";
  }
  out.push_back(a);
}

}  // namespace

std::vector<FrontAudit> rh_audit(const TrackerState& state) {
  std::vector<FrontAudit> out;
  for (const Segment& seg : state.history) audit_one(seg, state, out);
  for (const Front& f : state.fronts) {
    Segment seg;
    static_cast<Front&>(seg) = f;
    seg.x1 = state.x;
    audit_one(seg, state, out);
  }
  return out;
}

double l1_distance(const TrackerState& a, const TrackerState& b, double x,
                   double window) {
  const Slice sa = state_slice(a, x);
  const Slice sb = state_slice(b, x);
  const double ga = sa.g, gb = sb.g;
  // Breakpoints in theta = y - g(x), clipped to [0, window].
  std::set<double> cuts{0.0, window};
  for (double y : sa.breakpoints) {
    const double th = y - ga;
    if (th > 0.0 && th < window) cuts.insert(th);
  }
  for (double y : sb.breakpoints) {
    const double th = y - gb;
    if (th > 0.0 && th < window) cuts.insert(th);
  }
  auto state_at = [](const Slice& s, double g, double th) -> const GasState& {
    size_t k = 0;
    while (k < s.breakpoints.size() && s.breakpoints[k] - g <= th) ++k;
    return s.states[k];
  };
  double dist = 0.0;
  std::vector<double> thetas(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < thetas.size(); ++i) {
    const double mid = 0.5 * (thetas[i] + thetas[i + 1]);
    dist += (thetas[i + 1] - thetas[i]) *
            max_norm(state_at(sa, ga, mid), state_at(sb, gb, mid));
  }
  return dist;
}

AsymptoticReport asymptotic_check(const TrackerState& state, double pbar) {
  AsymptoticReport rep;
  rep.x_last_event = last_event_x(state);
  rep.events_pending = next_event(state, 1e18).kind != "none";

  const Slice sl = state_slice(state, state.x);
  rep.top_state = sl.states.back();
  rep.boundary_p_error = std::fabs(sl.states[0].p - pbar);
  const BoundaryFan bf = solve_free_boundary(rep.top_state, pbar, state.model);
  rep.predicted_uinf = bf.middle;
  rep.predicted_slope = bf.middle.v / bf.middle.u;
  rep.boundary_slope_tail = state.fronts[0].slope;
  rep.slope_error = std::fabs(rep.boundary_slope_tail - rep.predicted_slope);

  rep.far_wave_shock_predicted = bf.alpha4 < 0.0;
  double total4 = 0.0;
  for (size_t i = 1; i < state.fronts.size(); ++i)
    if (state.fronts[i].family == 4) total4 += state.fronts[i].strength;
  if (std::fabs(bf.alpha4) < 1e-8) {
    rep.far_wave_matches = std::fabs(total4) < 1e-8;
  } else {
    rep.far_wave_matches = (total4 < 0.0) == (bf.alpha4 < 0.0) &&
                           std::fabs(total4) >= 1e-8;
  }
  return rep;
}

double tv_of_slice(const Slice& s) {
  double tv = 0.0;
  for (size_t i = 0; i + 1 < s.states.size(); ++i)
    tv += max_norm(s.states[i], s.states[i + 1]);
  return tv;
}

UniformBounds uniform_bounds(const TrackerState& state,
                             const GasState& uplus) {
  UniformBounds b;
  std::set<double> cuts{0.0, state.x};
  for (const TrackerEvent& ev : state.events)
    if (ev.x < state.x) cuts.insert(ev.x);
  std::vector<double> xs(cuts.begin(), cuts.end());
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    const Slice sl = state_slice(state, 0.5 * (xs[i] + xs[i + 1]));
    b.max_tv = std::max(b.max_tv, tv_of_slice(sl));
    for (const GasState& s : sl.states)
      b.max_linf = std::max(b.max_linf, max_norm(s, uplus));
  }
  for (const Segment& seg : state.history)
    if (seg.family == 0)
      b.max_boundary_slope =
          std::max(b.max_boundary_slope, std::fabs(seg.slope));
  b.max_boundary_slope =
      std::max(b.max_boundary_slope, std::fabs(state.fronts[0].slope));
  return b;
}

}  // namespace ft
