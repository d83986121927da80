#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ft/app.hpp"
#include "ft/glimm.hpp"

namespace ft {

namespace {

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  return out;
}

std::vector<GasState> parse_states(const std::string& s) {
  std::vector<GasState> out;
  std::stringstream ss(s);
  std::string group;
  while (std::getline(ss, group, ';')) {
    const std::vector<double> q = parse_list(group);
    if (q.size() != 4)
      throw std::invalid_argument("state needs four components: " + group);
    out.push_back({q[0], q[1], q[2], q[3]});
  }
  return out;
}

}  // namespace

GasState background_state(const RunConfig& cfg) {
  return {cfg.ubar, 0.0, cfg.pbar, cfg.rho_plus};
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw std::invalid_argument("config line " + std::to_string(lineno) +
                                    ": expected key=value");
      continue;
    }
    auto trim = [](std::string s) {
      const size_t a = s.find_first_not_of(" \t\r");
      const size_t b = s.find_last_not_of(" \t\r");
      return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "gamma")
      cfg.gas.gamma = std::stod(val);
    else if (key == "kappa_eos")
      cfg.gas.kappa_eos = std::stod(val);
    else if (key == "c_v")
      cfg.gas.c_v = std::stod(val);
    else if (key == "ubar")
      cfg.ubar = std::stod(val);
    else if (key == "pbar")
      cfg.pbar = std::stod(val);
    else if (key == "rho_plus")
      cfg.rho_plus = std::stod(val);
    else if (key == "rho_minus")
      cfg.rho_minus = std::stod(val);
    else if (key == "profile")
      cfg.profile = val;
    else if (key == "epsilon")
      cfg.epsilon = std::stod(val);
    else if (key == "n_waves")
      cfg.n_waves = std::stoi(val);
    else if (key == "y_support")
      cfg.y_support = std::stod(val);
    else if (key == "seed")
      cfg.seed = std::stoull(val);
    else if (key == "breakpoints")
      cfg.breakpoints = parse_list(val);
    else if (key == "states")
      cfg.states = parse_states(val);
    else if (key == "delta" || key == "deltas")
      cfg.deltas = parse_list(val);
    else if (key == "x_max")
      cfg.x_max = std::stod(val);
    else if (key == "kappa_glimm")
      cfg.kappa_glimm = std::stod(val);
    else if (key == "kplus")
      cfg.kplus = std::stod(val);
    else if (key == "c0eps0")
      cfg.c0eps0 = std::stod(val);
    else if (key == "max_events")
      cfg.max_events = std::stoi(val);
    else if (key == "slices")
      cfg.slice_xs = parse_list(val);
    else if (key == "l1_window")
      cfg.l1_window = std::stod(val);
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
  const GasState bg = background_state(cfg);
  if (!is_supersonic_x(bg, cfg.gas))
    throw std::invalid_argument("background flow is not supersonic");
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

InitialProfile build_profile(const RunConfig& cfg) {
  InitialProfile p;
  const GasState bg = background_state(cfg);
  if (cfg.profile == "none") {
    p.states = {bg};
    return p;
  }
  if (cfg.profile == "explicit") {
    if (cfg.states.size() != cfg.breakpoints.size() + 1)
      throw std::invalid_argument(
          "explicit profile: need breakpoints+1 states");
    p.breakpoints = cfg.breakpoints;
    p.states = cfg.states;
    return p;
  }
  if (cfg.profile != "random")
    throw std::invalid_argument("unknown profile kind: " + cfg.profile);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uy(0.0, cfg.y_support);
  std::uniform_real_distribution<double> uo(-1.0, 1.0);
  const int n = cfg.n_waves;
  p.breakpoints.resize(n);
  for (double& y : p.breakpoints) y = uy(rng);
  std::sort(p.breakpoints.begin(), p.breakpoints.end());
  for (int i = 1; i < n; ++i)
    if (p.breakpoints[i] - p.breakpoints[i - 1] < 1e-6)
      p.breakpoints[i] = p.breakpoints[i - 1] + 1e-6;

  // n+1 cumulative offsets from the background; rescale so that the total
  // variation (including the jump from the background at the bottom) is
  // exactly epsilon.
  std::vector<Vec4> offs(n + 1);
  double total = 0.0;
  Vec4 prev{0.0, 0.0, 0.0, 0.0};
  for (int k = 0; k <= n; ++k) {
    Vec4 d{uo(rng), uo(rng), uo(rng), uo(rng)};
    double jump = 0.0;
    for (int c = 0; c < 4; ++c) {
      offs[k][c] = prev[c] + d[c];
      jump = std::max(jump, std::fabs(d[c]));
    }
    total += jump;
    prev = offs[k];
  }
  const double scale = (total > 0.0) ? cfg.epsilon / total : 0.0;
  p.states.resize(n + 1);
  for (int k = 0; k <= n; ++k)
    p.states[k] = {bg.u + scale * offs[k][0], bg.v + scale * offs[k][1],
                   bg.p + scale * offs[k][2], bg.rho + scale * offs[k][3]};
  return p;
}

TrackerConfig tracker_config(const RunConfig& cfg, double delta) {
  TrackerConfig tc;
  tc.delta = delta;
  tc.pbar = cfg.pbar;
  tc.rho_still = cfg.rho_minus;
  tc.c0eps0 = cfg.c0eps0;
  tc.max_events = cfg.max_events;
  tc.glimm.kappa = cfg.kappa_glimm;
  if (cfg.kplus > 0.0) {
    tc.glimm.kplus = cfg.kplus;
  } else {
    const double k2 =
        measure_max_k2(background_state(cfg), 5.0 * cfg.epsilon, cfg.gas);
    tc.glimm.kplus = 2.5 * std::max(1.0, k2);
  }
  return tc;
}

}  // namespace ft
