#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ft/app.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::vector<double> deltas;
  double x_max = -1.0;
  long long seed = -1;
};

ft::RunConfig resolve_config(const CommonOpts& opts) {
  ft::RunConfig cfg = opts.config_path.empty()
                          ? ft::RunConfig{}
                          : ft::parse_config_file(opts.config_path);
  if (!opts.deltas.empty()) cfg.deltas = opts.deltas;
  if (opts.x_max > 0.0) cfg.x_max = opts.x_max;
  if (opts.seed >= 0) cfg.seed = static_cast<std::uint64_t>(opts.seed);
  return cfg;
}

int do_run(const CommonOpts& opts) {
  const ft::RunConfig cfg = resolve_config(opts);
  fs::create_directories(opts.out_dir);
  int status = 0;
  for (double delta : cfg.deltas) {
    ft::RunResult r;
    try {
      r = ft::run_once(cfg, delta);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "run aborted (delta=%g): %s\n", delta, e.what());
      return 2;
    }
    const std::string prefix =
        opts.out_dir + (cfg.deltas.size() > 1
                            ? "/delta_" + std::to_string(delta) + "_"
                            : "/");
    ft::write_fronts_csv(r.state, prefix + "fronts.csv");
    ft::write_boundary_csv(r.state, prefix + "boundary.csv");
    ft::write_glimm_csv(r.state, prefix + "glimm.csv");
    for (double x : cfg.slice_xs)
      ft::write_slice_csv(r.state, x,
                          prefix + "slice_" + std::to_string(x) + ".csv");
    ft::write_reports_json(r, cfg, prefix + "reports.json");
    ft::save_solution(r, cfg, prefix + "solution.json");
    std::printf(
        "delta=%g events=%zu flagged=%d weak_max=%g entropy=%g "
        "slope_err=%g\n",
        delta, r.state.events.size(), r.state.glimm.any_flagged ? 1 : 0,
        std::max(std::max(r.weak.F, r.weak.G), std::max(r.weak.I, r.weak.J)),
        r.weak.E, r.asym.slope_error);
    if (r.state.glimm.any_flagged) status = 1;
  }
  return status;
}

int do_study(const CommonOpts& opts) {
  const ft::RunConfig cfg = resolve_config(opts);
  fs::create_directories(opts.out_dir);
  ft::StudyResult res;
  try {
    res = ft::convergence_study(cfg, opts.out_dir);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "study aborted: %s\n", e.what());
    return 2;
  }
  FILE* f = std::fopen((opts.out_dir + "/study.csv").c_str(), "w");
  std::fprintf(f, "delta,weak_max,entropy,events\n");
  for (const ft::StudyRow& row : res.rows)
    std::fprintf(f, "%.17g,%.17g,%.17g,%d\n", row.delta, row.weak_max,
                 row.entropy, row.events);
  std::fclose(f);
  std::printf("slope=%g\n", res.slope);
  for (size_t i = 0; i < res.l1_pairs.size(); ++i)
    std::printf("pair %zu: l1=%g sup_g=%g\n", i, res.l1_pairs[i],
                res.g_sup_pairs[i]);
  return 0;
}

int do_verify(const std::string& solution_path, const std::string& out_dir) {
  ft::LoadedSolution ls;
  try {
    ls = ft::load_solution(solution_path);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verify aborted: %s\n", e.what());
    return 2;
  }
  ft::RunResult r;
  r.state = ls.state;
  r.bounds = ft::uniform_bounds(r.state, ft::background_state(ls.cfg));
  r.asym = ft::asymptotic_check(r.state, ls.cfg.pbar);
  for (const ft::FrontAudit& a : ft::rh_audit(r.state)) {
    if (a.kind == ft::FrontKind::rarefaction_step)
      r.max_step_rh = std::max(r.max_step_rh, a.residual);
    else
      r.max_shock_rh = std::max(r.max_shock_rh, a.residual);
  }
  double y_hi = 1.0 + 0.8 * ls.cfg.x_max;
  r.weak = ft::weak_form(r.state, 0.0, ls.cfg.x_max,
                         ft::default_test_set(0.0, ls.cfg.x_max, -0.5, y_hi));
  fs::create_directories(out_dir);
  ft::write_reports_json(r, ls.cfg, out_dir + "/reports.json");
  std::printf("weak_max=%g entropy=%g shock_rh=%g step_rh=%g\n",
              std::max(std::max(r.weak.F, r.weak.G),
                       std::max(r.weak.I, r.weak.J)),
              r.weak.E, r.max_shock_rh, r.max_step_rh);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Event-driven front tracking for steady supersonic flow over "
               "a free boundary"};
  app.require_subcommand(1);
  CommonOpts opts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", opts.config_path, "key=value config file");
    sub->add_option("--out", opts.out_dir, "output directory");
    sub->add_option("--delta", opts.deltas, "front-splitting parameter(s)")
        ->delimiter(',');
    sub->add_option("--xmax", opts.x_max, "downstream extent");
    sub->add_option("--seed", opts.seed, "random-profile seed");
  };

  CLI::App* run = app.add_subcommand("run", "run the tracker and verifier");
  add_common(run);
  CLI::App* study =
      app.add_subcommand("study", "convergence study over a delta list");
  add_common(study);
  std::string solution_path;
  CLI::App* verify =
      app.add_subcommand("verify", "re-run the verifier on a saved solution");
  verify->add_option("solution", solution_path, "solution.json path")
      ->required();
  verify->add_option("--out", opts.out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return do_run(opts);
  if (study->parsed()) return do_study(opts);
  return do_verify(solution_path, opts.out_dir);
}
