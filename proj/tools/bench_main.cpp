#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pft/bench/suite.hpp"
#include "pft/bench/svg.hpp"
#include "pft/envs/map_io.hpp"

namespace {

using nlohmann::json;
using pft::bench::SuiteConfig;

template <typename T>
void maybe(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void apply_config_file(const std::string& path, SuiteConfig& cfg,
                       std::string& env_name, std::string& planner_name,
                       std::string& ablation, std::string& out_csv,
                       std::string& out_summary, std::string& trace_dir,
                       bool& tree_diag, bool& no_timing, bool& full) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  json j;
  in >> j;

  maybe(j, "env", env_name);
  maybe(j, "planner", planner_name);
  maybe(j, "ablation", ablation);
  maybe(j, "seeds", cfg.n_seeds);
  maybe(j, "episodes", cfg.episodes_per_seed);
  maybe(j, "base_seed", cfg.base_seed);
  maybe(j, "workers", cfg.workers);
  maybe(j, "map", cfg.map_path);
  maybe(j, "out", out_csv);
  maybe(j, "summary", out_summary);
  maybe(j, "trace", trace_dir);
  maybe(j, "tree_diag", tree_diag);
  maybe(j, "no_timing", no_timing);
  maybe(j, "full", full);

  if (j.contains("filter")) {
    const json& f = j.at("filter");
    maybe(f, "particle_count", cfg.episode.filter.particle_count);
    maybe(f, "proposal_fraction", cfg.episode.filter.proposal_fraction);
    maybe(f, "proposal_decay", cfg.episode.filter.proposal_decay);
    maybe(f, "resample_period", cfg.episode.filter.resample_period);
  }
  if (j.contains("planner_params")) {
    const json& p = j.at("planner_params");
    maybe(p, "n_iter", cfg.episode.plan.n_iter);
    maybe(p, "c", cfg.episode.plan.c);
    maybe(p, "k_action", cfg.episode.plan.k_action);
    maybe(p, "alpha_action", cfg.episode.plan.alpha_action);
    maybe(p, "k_obs", cfg.episode.plan.k_obs);
    maybe(p, "alpha_obs", cfg.episode.plan.alpha_obs);
    maybe(p, "m_particles", cfg.episode.plan.m_particles);
    maybe(p, "max_depth", cfg.episode.plan.max_depth);
    maybe(p, "gamma", cfg.episode.plan.gamma);
  }
  if (j.contains("env_params")) {
    pft::envs::lightdark_config_from_json(j.at("env_params"), cfg.lightdark);
    pft::envs::floor_config_from_json(j.at("env_params"), cfg.floor);
  }
}

int run_command(const std::string& env_name, const std::string& planner_name,
                const std::string& ablation, SuiteConfig cfg,
                const std::string& out_csv, const std::string& out_summary,
                const std::string& trace_dir, bool tree_diag, bool no_timing,
                bool full) {
  std::string scenario = env_name;
  if (env_name == "lightdark" && ablation == "traps") scenario += "+traps";
  if (env_name == "lightdark" && ablation == "mismatch") scenario += "+mismatch";
  if (env_name != "lightdark" && ablation != "none") {
    std::cerr << "error: ablation '" << ablation << "' requires --env lightdark\n";
    return 2;
  }
  cfg.scenario = pft::bench::scenario_from_string(scenario);
  cfg.episode.planner = pft::bench::planner_kind_from_string(planner_name);
  cfg.episode.measure_time = !no_timing;
  cfg.episode.tree_diagnostics = tree_diag;
  if (full) {
    // Paper-scale sizes; the default is a desk-scale run.
    cfg.episodes_per_seed = env_name == "floor" ? 100 : 50;
  }
  if (!trace_dir.empty()) {
    cfg.episode.keep_trace = true;
    cfg.episode.keep_snapshots = true;
    std::filesystem::create_directories(trace_dir);
  }

  const pft::bench::SuiteResult result = pft::bench::run_suite(cfg);

  if (!out_csv.empty()) {
    std::ofstream csv(out_csv);
    if (!csv) {
      std::cerr << "error: cannot write " << out_csv << "\n";
      return 2;
    }
    csv << result.csv;
  }
  if (!out_summary.empty()) {
    std::ofstream summary(out_summary);
    if (!summary) {
      std::cerr << "error: cannot write " << out_summary << "\n";
      return 2;
    }
    summary << result.summary_json.dump(2) << "\n";
  }
  if (!trace_dir.empty()) {
    const auto env = pft::bench::make_scenario_env(cfg);
    for (const auto& rec : result.episodes) {
      const std::string stem = trace_dir + "/episode_" +
                               std::to_string(rec.seed) + "_" +
                               std::to_string(rec.episode_index);
      std::ofstream(stem + ".json") << pft::bench::episode_to_json(rec).dump(2)
                                    << "\n";
      std::ofstream(stem + ".svg") << pft::bench::render_trajectory(rec, env.map);
    }
  }

  const auto& s = result.summary;
  std::cout << "scenario " << pft::bench::to_string(cfg.scenario) << ", planner "
            << planner_name << ": " << s.total_episodes << " episodes, success "
            << s.success.mean << " +/- " << s.success.se << ", reward "
            << s.reward_all.mean << ", steps(success) " << s.steps_success.mean
            << ", particle distance(success) "
            << s.particle_distance_success.mean << ", plan time "
            << s.plan_time_s.mean << " s\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"POMDP particle-belief planning benchmark harness"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a benchmark suite");
  std::string env_name = "floor";
  std::string planner_name = "pft";
  std::string ablation = "none";
  std::string config_path;
  std::string out_csv;
  std::string out_summary;
  std::string trace_dir;
  bool tree_diag = false;
  bool no_timing = false;
  bool full = false;
  SuiteConfig cfg;

  run->add_option("--config", config_path, "JSON config file; flags override");
  auto* env_opt =
      run->add_option("--env", env_name, "floor | lightdark | tiger");
  auto* planner_opt = run->add_option("--planner", planner_name,
                                      "pft | straight | random");
  auto* ablation_opt =
      run->add_option("--ablation", ablation, "none | traps | mismatch");
  auto* seeds_opt = run->add_option("--seeds", cfg.n_seeds, "Number of seeds");
  auto* episodes_opt =
      run->add_option("--episodes", cfg.episodes_per_seed, "Episodes per seed");
  auto* base_seed_opt =
      run->add_option("--base-seed", cfg.base_seed, "Seed ladder origin");
  auto* workers_opt = run->add_option("--workers", cfg.workers,
                                      "Worker threads (0: all cores)");
  auto* map_opt = run->add_option("--map", cfg.map_path, "Map JSON override");
  auto* out_opt = run->add_option("--out", out_csv, "CSV output path");
  auto* summary_opt =
      run->add_option("--summary", out_summary, "JSON summary path");
  auto* trace_opt = run->add_option("--trace", trace_dir,
                                    "Directory for per-episode traces + SVGs");
  auto* diag_flag = run->add_flag("--tree-diag", tree_diag,
                                  "Record per-plan search diagnostics");
  auto* timing_flag = run->add_flag(
      "--no-timing", no_timing,
      "Zero the timing columns so outputs are byte-reproducible");
  auto* full_flag =
      run->add_flag("--full", full, "Paper-scale episode counts");
  auto* iters_opt = run->add_option("--iterations", cfg.episode.plan.n_iter,
                                    "Tree-search iterations per plan");
  auto* particles_opt = run->add_option(
      "--particles", cfg.episode.filter.particle_count, "Filter particles");

  auto* dump_map = app.add_subcommand("dump-map", "Print a default map JSON");
  std::string dump_env = "floor";
  dump_map->add_option("--env", dump_env, "floor | lightdark");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dump_map->parsed()) {
      std::cout << pft::envs::default_map_json(dump_env).dump(2) << "\n";
      return 0;
    }

    // Config file first, then explicit flags on top.
    if (!config_path.empty()) {
      SuiteConfig file_cfg;
      std::string f_env = env_name, f_planner = planner_name,
                  f_ablation = ablation, f_csv = out_csv,
                  f_summary = out_summary, f_trace = trace_dir;
      bool f_diag = tree_diag, f_timing = no_timing, f_full = full;
      apply_config_file(config_path, file_cfg, f_env, f_planner, f_ablation,
                        f_csv, f_summary, f_trace, f_diag, f_timing, f_full);
      if (env_opt->count() == 0) env_name = f_env;
      if (planner_opt->count() == 0) planner_name = f_planner;
      if (ablation_opt->count() == 0) ablation = f_ablation;
      if (seeds_opt->count() == 0) cfg.n_seeds = file_cfg.n_seeds;
      if (episodes_opt->count() == 0)
        cfg.episodes_per_seed = file_cfg.episodes_per_seed;
      if (base_seed_opt->count() == 0) cfg.base_seed = file_cfg.base_seed;
      if (workers_opt->count() == 0) cfg.workers = file_cfg.workers;
      if (map_opt->count() == 0) cfg.map_path = file_cfg.map_path;
      if (out_opt->count() == 0) out_csv = f_csv;
      if (summary_opt->count() == 0) out_summary = f_summary;
      if (trace_opt->count() == 0) trace_dir = f_trace;
      if (diag_flag->count() == 0) tree_diag = f_diag;
      if (timing_flag->count() == 0) no_timing = f_timing;
      if (full_flag->count() == 0) full = f_full;
      const int cli_iters = cfg.episode.plan.n_iter;
      const int cli_particles = cfg.episode.filter.particle_count;
      cfg.episode.plan = file_cfg.episode.plan;
      cfg.episode.filter = file_cfg.episode.filter;
      if (iters_opt->count() > 0) cfg.episode.plan.n_iter = cli_iters;
      if (particles_opt->count() > 0)
        cfg.episode.filter.particle_count = cli_particles;
      cfg.lightdark = file_cfg.lightdark;
      cfg.floor = file_cfg.floor;
    }

    return run_command(env_name, planner_name, ablation, cfg, out_csv,
                       out_summary, trace_dir, tree_diag, no_timing, full);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
