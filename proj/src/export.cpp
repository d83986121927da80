#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ft/app.hpp"

namespace ft {

namespace {

using nlohmann::ordered_json;

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const char* kind_name(FrontKind k) {
  switch (k) {
    case FrontKind::shock:
      return "shock";
    case FrontKind::rarefaction_step:
      return "rarefaction-step";
    case FrontKind::contact:
      return "contact";
    case FrontKind::free_boundary:
      return "boundary";
  }
  return "?";
}

FrontKind kind_from_name(const std::string& s) {
  if (s == "shock") return FrontKind::shock;
  if (s == "rarefaction-step") return FrontKind::rarefaction_step;
  if (s == "contact") return FrontKind::contact;
  if (s == "boundary") return FrontKind::free_boundary;
  throw std::invalid_argument("unknown front kind: " + s);
}

std::vector<Segment> all_segments(const TrackerState& s) {
  std::vector<Segment> out = s.history;
  for (const Front& f : s.fronts) {
    Segment seg;
    static_cast<Front&>(seg) = f;
    seg.x1 = s.x;
    out.push_back(seg);
  }
  return out;
}

ordered_json state_json(const GasState& s) {
  return ordered_json::array({s.u, s.v, s.p, s.rho});
}

GasState state_from_json(const ordered_json& j) {
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

ordered_json segment_json(const Segment& s) {
  ordered_json j;
  j["id"] = s.id;
  j["family"] = s.family;
  j["kind"] = kind_name(s.kind);
  j["generation"] = s.generation;
  j["x0"] = s.x0;
  j["y0"] = s.y0;
  j["x1"] = s.x1;
  j["slope"] = s.slope;
  j["strength"] = s.strength;
  j["strength2"] = s.strength2;
  j["below"] = state_json(s.below);
  j["above"] = state_json(s.above);
  return j;
}

Segment segment_from_json(const ordered_json& j) {
  Segment s;
  s.id = j["id"].get<int>();
  s.family = j["family"].get<int>();
  s.kind = kind_from_name(j["kind"].get<std::string>());
  s.generation = j["generation"].get<int>();
  s.x0 = j["x0"].get<double>();
  s.y0 = j["y0"].get<double>();
  s.x1 = j["x1"].get<double>();
  s.slope = j["slope"].get<double>();
  s.strength = j["strength"].get<double>();
  s.strength2 = j["strength2"].get<double>();
  s.below = state_from_json(j["below"]);
  s.above = state_from_json(j["above"]);
  return s;
}

}  // namespace

RunResult run_once(const RunConfig& cfg, double delta) {
  RunResult r;
  const InitialProfile profile = build_profile(cfg);
  const TrackerConfig tc = tracker_config(cfg, delta);
  r.state = initialize(profile, cfg.gas, tc);
  advance(r.state, cfg.x_max);

  r.measured_k2_max =
      measure_max_k2(background_state(cfg), 5.0 * cfg.epsilon, cfg.gas);
  r.bounds = uniform_bounds(r.state, background_state(cfg));
  r.asym = asymptotic_check(r.state, cfg.pbar);

  for (const FrontAudit& a : rh_audit(r.state)) {
    if (a.kind == FrontKind::rarefaction_step)
      r.max_step_rh = std::max(r.max_step_rh, a.residual);
    else
      r.max_shock_rh = std::max(r.max_shock_rh, a.residual);
  }

  const double y_hi =
      (profile.breakpoints.empty() ? 1.0 : profile.breakpoints.back()) +
      0.8 * cfg.x_max;
  r.weak = weak_form(r.state, 0.0, cfg.x_max,
                     default_test_set(0.0, cfg.x_max, -0.5, y_hi));
  return r;
}

void write_fronts_csv(const TrackerState& s, const std::string& path) {
  std::ofstream out(path);
  out << "x0,y0,x1,y1,family,kind,generation,strength,strength2\n";
  for (const Segment& seg : all_segments(s)) {
    const double y1 = seg.y0 + seg.slope * (seg.x1 - seg.x0);
    out << fmt(seg.x0) << ',' << fmt(seg.y0) << ',' << fmt(seg.x1) << ','
        << fmt(y1) << ',' << seg.family << ',' << kind_name(seg.kind) << ','
        << seg.generation << ',' << fmt(seg.strength) << ','
        << fmt(seg.strength2) << '\n';
  }
}

void write_boundary_csv(const TrackerState& s, const std::string& path) {
  std::ofstream out(path);
  out << "x,g\n";
  for (const auto& [x, g] : s.boundary_vertices)
    out << fmt(x) << ',' << fmt(g) << '\n';
  out << fmt(s.x) << ',' << fmt(boundary_at(s, s.x)) << '\n';
}

void write_glimm_csv(const TrackerState& s, const std::string& path) {
  std::ofstream out(path);
  out << "x,V,Q,G,event_kind,flagged\n";
  for (const GlimmRecord& r : s.glimm.records)
    out << fmt(r.x) << ',' << fmt(r.V) << ',' << fmt(r.Q) << ',' << fmt(r.G)
        << ',' << r.event_kind << ',' << (r.flagged ? 1 : 0) << '\n';
}

void write_slice_csv(const TrackerState& s, double x, const std::string& path) {
  std::ofstream out(path);
  const Slice sl = state_slice(s, x);
  out << "y_from,u,v,p,rho\n";
  double y = sl.g;
  for (size_t k = 0; k < sl.states.size(); ++k) {
    const GasState& st = sl.states[k];
    out << fmt(y) << ',' << fmt(st.u) << ',' << fmt(st.v) << ',' << fmt(st.p)
        << ',' << fmt(st.rho) << '\n';
    if (k < sl.breakpoints.size()) y = sl.breakpoints[k];
  }
}

void write_reports_json(const RunResult& r, const RunConfig& cfg,
                        const std::string& path) {
  ordered_json j;
  j["delta"] = r.state.config.delta;
  j["x_max"] = cfg.x_max;
  j["events"] = r.state.events.size();
  j["generation_cutoff"] = r.state.generation_cutoff;
  j["removed_strength_total"] = r.state.removed_strength_total;
  j["glimm"] = {{"kappa", r.state.config.glimm.kappa},
                {"kplus", r.state.config.glimm.kplus},
                {"any_flagged", r.state.glimm.any_flagged},
                {"records", r.state.glimm.records.size()},
                {"G_initial", r.state.glimm.records.empty()
                                  ? 0.0
                                  : r.state.glimm.records.front().G},
                {"G_final", r.state.glimm.records.empty()
                                ? 0.0
                                : r.state.glimm.records.back().G}};
  j["measured_k2_max"] = r.measured_k2_max;
  j["rh_audit"] = {{"max_shock_contact_boundary", r.max_shock_rh},
                   {"max_rarefaction_step", r.max_step_rh}};
  j["weak_form"] = {{"F", r.weak.F},     {"G", r.weak.G}, {"I", r.weak.I},
                    {"J", r.weak.J},     {"E", r.weak.E},
                    {"n_tests", r.weak.n_tests}};
  j["bounds"] = {{"max_tv", r.bounds.max_tv},
                 {"max_linf", r.bounds.max_linf},
                 {"max_boundary_slope", r.bounds.max_boundary_slope},
                 {"epsilon", cfg.epsilon}};
  j["asymptotics"] = {
      {"x_last_event", r.asym.x_last_event},
      {"events_pending", r.asym.events_pending},
      {"boundary_slope_tail", r.asym.boundary_slope_tail},
      {"predicted_slope", r.asym.predicted_slope},
      {"slope_error", r.asym.slope_error},
      {"boundary_p_error", r.asym.boundary_p_error},
      {"far_wave_shock_predicted", r.asym.far_wave_shock_predicted},
      {"far_wave_matches", r.asym.far_wave_matches},
      {"top_state", state_json(r.asym.top_state)},
      {"predicted_uinf", state_json(r.asym.predicted_uinf)}};
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

void save_solution(const RunResult& r, const RunConfig& cfg,
                   const std::string& path) {
  const TrackerState& s = r.state;
  ordered_json j;
  j["model"] = {{"gamma", s.model.gamma},
                {"kappa_eos", s.model.kappa_eos},
                {"c_v", s.model.c_v}};
  j["config"] = {{"delta", s.config.delta},
                 {"pbar", s.config.pbar},
                 {"rho_still", s.config.rho_still},
                 {"c0eps0", s.config.c0eps0},
                 {"max_events", s.config.max_events},
                 {"kappa", s.config.glimm.kappa},
                 {"kplus", s.config.glimm.kplus},
                 {"x_max", cfg.x_max},
                 {"epsilon", cfg.epsilon}};
  j["x"] = s.x;
  j["generation_cutoff"] = s.generation_cutoff;
  j["removed_strength_total"] = s.removed_strength_total;
  ordered_json fr = ordered_json::array();
  for (const Front& f : s.fronts) {
    Segment seg;
    static_cast<Front&>(seg) = f;
    seg.x1 = s.x;
    fr.push_back(segment_json(seg));
  }
  j["fronts"] = fr;
  ordered_json hist = ordered_json::array();
  for (const Segment& seg : s.history) hist.push_back(segment_json(seg));
  j["history"] = hist;
  ordered_json verts = ordered_json::array();
  for (const auto& [x, g] : s.boundary_vertices)
    verts.push_back(ordered_json::array({x, g}));
  j["boundary_vertices"] = verts;
  ordered_json evs = ordered_json::array();
  for (const TrackerEvent& e : s.events)
    evs.push_back({{"x", e.x}, {"kind", e.kind}, {"a", e.id_a}, {"b", e.id_b}});
  j["events"] = evs;
  ordered_json gl = ordered_json::array();
  for (const GlimmRecord& rec : s.glimm.records)
    gl.push_back({{"x", rec.x},
                  {"V", rec.V},
                  {"Q", rec.Q},
                  {"G", rec.G},
                  {"event_kind", rec.event_kind},
                  {"flagged", rec.flagged},
                  {"flag_reason", rec.flag_reason}});
  j["glimm"] = gl;
  j["still_gas"] = state_json(s.still_gas);
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

LoadedSolution load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open solution: " + path);
  ordered_json j;
  in >> j;
  LoadedSolution ls;
  TrackerState& s = ls.state;
  s.model.gamma = j["model"]["gamma"].get<double>();
  s.model.kappa_eos = j["model"]["kappa_eos"].get<double>();
  s.model.c_v = j["model"]["c_v"].get<double>();
  s.config.delta = j["config"]["delta"].get<double>();
  s.config.pbar = j["config"]["pbar"].get<double>();
  s.config.rho_still = j["config"]["rho_still"].get<double>();
  s.config.c0eps0 = j["config"]["c0eps0"].get<double>();
  s.config.max_events = j["config"]["max_events"].get<int>();
  s.config.glimm.kappa = j["config"]["kappa"].get<double>();
  s.config.glimm.kplus = j["config"]["kplus"].get<double>();
  s.x = j["x"].get<double>();
  s.generation_cutoff = j["generation_cutoff"].get<int>();
  s.removed_strength_total = j["removed_strength_total"].get<double>();
  for (const auto& je : j["fronts"]) {
    const Segment seg = segment_from_json(je);
    s.fronts.push_back(static_cast<const Front&>(seg));
  }
  for (const auto& je : j["history"])
    s.history.push_back(segment_from_json(je));
  for (const auto& je : j["boundary_vertices"])
    s.boundary_vertices.push_back({je[0].get<double>(), je[1].get<double>()});
  for (const auto& je : j["events"])
    s.events.push_back({je["x"].get<double>(), je["kind"].get<std::string>(),
                        je["a"].get<int>(), je["b"].get<int>()});
  for (const auto& je : j["glimm"]) {
    GlimmRecord rec;
    rec.x = je["x"].get<double>();
    rec.V = je["V"].get<double>();
    rec.Q = je["Q"].get<double>();
    rec.G = je["G"].get<double>();
    rec.event_kind = je["event_kind"].get<std::string>();
    rec.flagged = je["flagged"].get<bool>();
    rec.flag_reason = je["flag_reason"].get<std::string>();
    s.glimm.records.push_back(rec);
    s.glimm.any_flagged = s.glimm.any_flagged || rec.flagged;
  }
  s.still_gas = state_from_json(j["still_gas"]);

  ls.cfg.gas = s.model;
  ls.cfg.pbar = s.config.pbar;
  ls.cfg.rho_minus = s.config.rho_still;
  ls.cfg.x_max = j["config"]["x_max"].get<double>();
  ls.cfg.epsilon = j["config"]["epsilon"].get<double>();
  ls.cfg.deltas = {s.config.delta};
  return ls;
}

StudyResult convergence_study(const RunConfig& cfg,
                              const std::string& out_dir) {
  if (cfg.deltas.size() < 3)
    throw std::invalid_argument("study needs at least three deltas");
  StudyResult res;
  std::vector<RunResult> runs;
  for (double d : cfg.deltas) {
    runs.push_back(run_once(cfg, d));
    const RunResult& r = runs.back();
    StudyRow row;
    row.delta = d;
    row.weak_max = std::max(std::max(r.weak.F, r.weak.G),
                            std::max(r.weak.I, r.weak.J));
    row.entropy = r.weak.E;
    row.events = static_cast<int>(r.state.events.size());
    res.rows.push_back(row);
    if (!out_dir.empty()) {
      const std::string tag = out_dir + "/delta_" + fmt(d);
      write_fronts_csv(r.state, tag + "_fronts.csv");
      write_boundary_csv(r.state, tag + "_boundary.csv");
      write_glimm_csv(r.state, tag + "_glimm.csv");
    }
  }
  const double window =
      (cfg.l1_window > 0.0) ? cfg.l1_window : cfg.y_support + 0.8 * cfg.x_max;
  for (size_t i = 0; i + 1 < runs.size(); ++i) {
    res.l1_pairs.push_back(l1_distance(runs[i].state, runs[i + 1].state,
                                       0.5 * cfg.x_max, window));
    double sup = 0.0;
    for (int k = 0; k <= 200; ++k) {
      const double x = cfg.x_max * k / 200.0;
      sup = std::max(sup, std::fabs(boundary_at(runs[i].state, x) -
                                    boundary_at(runs[i + 1].state, x)));
    }
    res.g_sup_pairs.push_back(sup);
  }
  // Least-squares slope of log(weak_max) vs log(delta).
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const int n = static_cast<int>(res.rows.size());
  for (const StudyRow& row : res.rows) {
    const double lx = std::log(row.delta);
    const double ly = std::log(std::max(row.weak_max, 1e-300));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  res.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return res;
}

}  // namespace ft
