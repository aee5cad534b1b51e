#include "pft/bench/suite.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "pft/bench/stats.hpp"
#include "pft/envs/map_io.hpp"
#include "pft/envs/tiger.hpp"

namespace pft::bench {

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::kFloor: return "floor";
    case Scenario::kLightDark: return "lightdark";
    case Scenario::kLightDarkTraps: return "lightdark+traps";
    case Scenario::kLightDarkMismatch: return "lightdark+mismatch";
    case Scenario::kTiger: return "tiger";
  }
  return "floor";
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "floor") return Scenario::kFloor;
  if (s == "lightdark") return Scenario::kLightDark;
  if (s == "lightdark+traps") return Scenario::kLightDarkTraps;
  if (s == "lightdark+mismatch") return Scenario::kLightDarkMismatch;
  if (s == "tiger") return Scenario::kTiger;
  throw std::invalid_argument("unknown scenario: " + s);
}

std::uint64_t episode_seed(std::uint64_t base_seed, int seed_index,
                           int episode_index) {
  return base_seed + static_cast<std::uint64_t>(seed_index) * 1000003ULL +
         static_cast<std::uint64_t>(episode_index);
}

envs::Environment make_scenario_env(const SuiteConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::kFloor:
      if (!cfg.map_path.empty()) {
        return envs::load_environment(cfg.map_path, "floor", cfg.floor);
      }
      return envs::make_floor_env(cfg.floor);
    case Scenario::kLightDark:
    case Scenario::kLightDarkTraps:
      if (!cfg.map_path.empty()) {
        return envs::load_environment(cfg.map_path, "lightdark", {},
                                      cfg.lightdark);
      }
      return envs::make_lightdark_env(cfg.lightdark);
    case Scenario::kLightDarkMismatch:
      if (!cfg.map_path.empty()) {
        return envs::load_environment(cfg.map_path, "lightdark", {},
                                      cfg.lightdark,
                                      envs::LightDarkAblation::kMismatch);
      }
      return envs::make_lightdark_env(cfg.lightdark,
                                      envs::LightDarkAblation::kMismatch);
    case Scenario::kTiger:
      return envs::tiger_environment(cfg.tiger);
  }
  throw std::invalid_argument("unreachable scenario");
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

MetricSummary summarize(const std::vector<std::vector<double>>& per_seed_values) {
  MetricSummary out;
  for (const auto& vals : per_seed_values) {
    if (!vals.empty()) out.per_seed.push_back(mean(vals));
  }
  const MeanSe ms = mean_of_means(out.per_seed);
  out.mean = ms.mean;
  out.se = ms.se;
  return out;
}

nlohmann::json metric_to_json(const MetricSummary& m) {
  return {{"mean", m.mean}, {"se", m.se}, {"per_seed", m.per_seed}};
}

}  // namespace

std::string csv_header() {
  return "seed,episode,success,steps,reward,mean_particle_distance,"
         "mean_plan_time_s";
}

std::string csv_row(const EpisodeRecord& rec) {
  return std::to_string(rec.seed) + "," + std::to_string(rec.episode_index) +
         "," + (rec.success ? "1" : "0") + "," + std::to_string(rec.steps) +
         "," + format_double(rec.reward_total) + "," +
         format_double(rec.mean_particle_distance) + "," +
         format_double(rec.mean_plan_time_s);
}

nlohmann::json summary_to_json(const RunSummary& s, const SuiteConfig& cfg) {
  return {{"scenario", to_string(cfg.scenario)},
          {"planner", to_string(cfg.episode.planner)},
          {"n_seeds", cfg.n_seeds},
          {"episodes_per_seed", cfg.episodes_per_seed},
          {"base_seed", cfg.base_seed},
          {"total_episodes", s.total_episodes},
          {"total_successes", s.total_successes},
          {"degeneracy_events", s.degeneracy_events},
          {"metrics",
           {{"success", metric_to_json(s.success)},
            {"reward_all", metric_to_json(s.reward_all)},
            {"reward_success", metric_to_json(s.reward_success)},
            {"steps_success", metric_to_json(s.steps_success)},
            {"particle_distance_success",
             metric_to_json(s.particle_distance_success)},
            {"plan_time_s", metric_to_json(s.plan_time_s)},
            {"filter_time_s", metric_to_json(s.filter_time_s)},
            {"trap_entries", metric_to_json(s.trap_entries)}}}};
}

SuiteResult run_suite(const SuiteConfig& cfg) {
  if (cfg.n_seeds <= 0 || cfg.episodes_per_seed <= 0) {
    throw std::invalid_argument("suite needs n_seeds > 0 and episodes > 0");
  }
  const envs::Environment base_env = make_scenario_env(cfg);
  const bool spawn_traps = cfg.scenario == Scenario::kLightDarkTraps;

  const int total = cfg.n_seeds * cfg.episodes_per_seed;
  std::vector<EpisodeRecord> episodes(total);

  auto run_one = [&](int index) {
    const int seed_idx = index / cfg.episodes_per_seed;
    const int ep_idx = index % cfg.episodes_per_seed;
    const std::uint64_t seed = episode_seed(cfg.base_seed, seed_idx, ep_idx);
    EpisodeRecord rec;
    if (spawn_traps) {
      Rng trap_rng = Rng(seed).substream(4);
      const auto traps =
          envs::spawn_test_traps(cfg.lightdark, base_env.map, trap_rng);
      rec = run_episode(envs::with_extra_traps(base_env, traps), cfg.episode,
                        seed, ep_idx);
    } else {
      rec = run_episode(base_env, cfg.episode, seed, ep_idx);
    }
    rec.episode_index = ep_idx;
    episodes[index] = std::move(rec);
  };

  int workers = cfg.workers > 0
                    ? cfg.workers
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers == 1 || total == 1) {
    for (int i = 0; i < total; ++i) run_one(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SuiteResult result;
  result.csv = csv_header() + "\n";
  for (const EpisodeRecord& rec : episodes) {
    result.csv += csv_row(rec) + "\n";
  }

  // Seed-level aggregation; cross-seed mean-of-means.
  std::vector<std::vector<double>> success(cfg.n_seeds), reward_all(cfg.n_seeds),
      reward_success(cfg.n_seeds), steps_success(cfg.n_seeds),
      pdist_success(cfg.n_seeds), plan_time(cfg.n_seeds),
      filter_time(cfg.n_seeds), trap_entries(cfg.n_seeds);
  RunSummary& s = result.summary;
  for (int i = 0; i < total; ++i) {
    const EpisodeRecord& rec = episodes[i];
    const int k = i / cfg.episodes_per_seed;
    success[k].push_back(rec.success ? 1.0 : 0.0);
    reward_all[k].push_back(rec.reward_total);
    plan_time[k].push_back(rec.mean_plan_time_s);
    filter_time[k].push_back(rec.mean_filter_time_s);
    trap_entries[k].push_back(rec.trap_entries);
    if (rec.success) {
      reward_success[k].push_back(rec.reward_total);
      steps_success[k].push_back(rec.steps);
      pdist_success[k].push_back(rec.mean_particle_distance);
      ++s.total_successes;
    }
    s.degeneracy_events += rec.degeneracy_events;
  }
  s.total_episodes = total;
  s.success = summarize(success);
  s.reward_all = summarize(reward_all);
  s.reward_success = summarize(reward_success);
  s.steps_success = summarize(steps_success);
  s.particle_distance_success = summarize(pdist_success);
  s.plan_time_s = summarize(plan_time);
  s.filter_time_s = summarize(filter_time);
  s.trap_entries = summarize(trap_entries);

  result.summary_json = summary_to_json(s, cfg);
  result.episodes = std::move(episodes);
  return result;
}

}  // namespace pft::bench
