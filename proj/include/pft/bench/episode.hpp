#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pft/envs/environment.hpp"
#include "pft/filter/filter.hpp"
#include "pft/planner/pft_dpw.hpp"

namespace pft::bench {

enum class PlannerKind { kPft, kStraight, kRandom, kScripted };

std::string to_string(PlannerKind kind);
PlannerKind planner_kind_from_string(const std::string& s);

struct EpisodeOptions {
  PlannerKind planner = PlannerKind::kPft;
  filter::FilterParams filter;
  planner::PlannerParams plan;
  bool measure_time = true;   // wall-clock timing columns; off for
                              // byte-reproducible outputs
  bool keep_trace = false;    // per-step records
  bool keep_snapshots = false;  // belief particle snapshots (implies trace)
  bool tree_diagnostics = false;
  std::vector<ActionId> script;          // kScripted only
  std::optional<StateVec> start_state;   // override the sampled start
};

struct StepRecord {
  int t = 0;
  StateVec state;       // state the step started from
  StateVec next;        // state after the transition
  ActionId action = 0;
  ObsVec obs;           // observation received after acting
  double reward = 0.0;
  StateVec belief_mean; // mean of the belief the planner saw
  double particle_distance = 0.0;
  double plan_time_s = 0.0;
  double filter_time_s = 0.0;
};

struct BeliefSnapshot {
  int step_index = 0;
  std::vector<StateVec> particles;
  std::vector<double> weights;
  StateVec mean;
};

struct EpisodeRecord {
  std::uint64_t seed = 0;
  int episode_index = 0;
  bool success = false;
  std::string terminal_status;  // "goal" | "step_limit"
  int steps = 0;
  double reward_total = 0.0;
  double mean_particle_distance = 0.0;
  double mean_plan_time_s = 0.0;
  double mean_filter_time_s = 0.0;
  int trap_entries = 0;
  int degeneracy_events = 0;
  std::vector<StepRecord> trace;
  std::vector<BeliefSnapshot> snapshots;
  std::vector<nlohmann::json> tree_diagnostics;
};

nlohmann::json episode_to_json(const EpisodeRecord& rec);
nlohmann::json belief_snapshot_to_json(const BeliefSnapshot& snap);

/// Runs one seeded episode: init belief, then plan / act / observe /
/// filter-update until goal entry or the step budget. Deterministic in
/// (env, opts, seed).
EpisodeRecord run_episode(const envs::Environment& env,
                          const EpisodeOptions& opts, std::uint64_t seed,
                          int episode_index = 0);

/// The trap-blind reference controller: the action whose displacement moves
/// the belief mean closest to the nearest goal point.
ActionId straight_to_goal_action(const envs::Environment& env,
                                 const filter::ParticleBelief& belief);

}  // namespace pft::bench
