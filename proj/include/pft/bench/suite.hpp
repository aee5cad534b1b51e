#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pft/bench/episode.hpp"
#include "pft/envs/floor.hpp"
#include "pft/envs/lightdark.hpp"
#include "pft/envs/tiger.hpp"

namespace pft::bench {

enum class Scenario { kFloor, kLightDark, kLightDarkTraps, kLightDarkMismatch, kTiger };

std::string to_string(Scenario s);
Scenario scenario_from_string(const std::string& s);

struct SuiteConfig {
  Scenario scenario = Scenario::kFloor;
  EpisodeOptions episode;
  int n_seeds = 10;
  int episodes_per_seed = 20;
  std::uint64_t base_seed = 1;
  int workers = 0;  // 0: hardware concurrency
  std::string map_path;  // optional map override (floor / lightdark)
  // Environment overrides applied before construction.
  envs::FloorConfig floor;
  envs::LightDarkConfig lightdark;
  envs::TigerConfig tiger;
};

/// Per-metric per-seed means plus the cross-seed mean-of-means with one
/// standard error over seed means.
struct MetricSummary {
  double mean = 0.0;
  double se = 0.0;
  std::vector<double> per_seed;
};

struct RunSummary {
  MetricSummary success;
  MetricSummary reward_all;          // every episode
  MetricSummary reward_success;      // successful episodes only
  MetricSummary steps_success;       // successful episodes only
  MetricSummary particle_distance_success;
  MetricSummary plan_time_s;
  MetricSummary filter_time_s;
  MetricSummary trap_entries;
  int total_episodes = 0;
  int total_successes = 0;
  int degeneracy_events = 0;
};

nlohmann::json summary_to_json(const RunSummary& s, const SuiteConfig& cfg);

/// Deterministic seed ladder: stride 1000003 between seeds, +episode index
/// within a seed.
std::uint64_t episode_seed(std::uint64_t base_seed, int seed_index,
                           int episode_index);

/// Builds the scenario's environment. For the trap ablation, per-episode
/// test traps are spawned from the episode seed inside run_suite.
envs::Environment make_scenario_env(const SuiteConfig& cfg);

struct SuiteResult {
  RunSummary summary;
  std::vector<EpisodeRecord> episodes;  // ordered by (seed, episode)
  std::string csv;                      // one row per episode
  nlohmann::json summary_json;
};

/// Runs n_seeds x episodes_per_seed episodes (parallel across workers;
/// aggregation is ordered by index, so results are independent of worker
/// count) and aggregates per the reporting conventions: success-conditioned
/// steps / particle distance, seed-level means, mean-of-means +/- SE.
SuiteResult run_suite(const SuiteConfig& cfg);

/// CSV header: seed,episode,success,steps,reward,mean_particle_distance,
/// mean_plan_time_s
std::string csv_header();
std::string csv_row(const EpisodeRecord& rec);

}  // namespace pft::bench
