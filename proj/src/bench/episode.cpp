#include "pft/bench/episode.hpp"

#include <chrono>
#include <limits>
#include <stdexcept>

#include "pft/core/dynamics.hpp"

namespace pft::bench {

using Clock = std::chrono::steady_clock;

std::string to_string(PlannerKind kind) {
  switch (kind) {
    case PlannerKind::kPft: return "pft";
    case PlannerKind::kStraight: return "straight";
    case PlannerKind::kRandom: return "random";
    case PlannerKind::kScripted: return "scripted";
  }
  return "pft";
}

PlannerKind planner_kind_from_string(const std::string& s) {
  if (s == "pft") return PlannerKind::kPft;
  if (s == "straight") return PlannerKind::kStraight;
  if (s == "random") return PlannerKind::kRandom;
  if (s == "scripted") return PlannerKind::kScripted;
  throw std::invalid_argument("unknown planner: " + s);
}

ActionId straight_to_goal_action(const envs::Environment& env,
                                 const filter::ParticleBelief& belief) {
  const StateVec mean = filter::belief_mean(belief);
  const StateVec target = env.map.nearest_goal_point(mean);
  ActionId best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (ActionId a = 0; a < env.spec.action_count(); ++a) {
    const StateVec next =
        env.map.clamp_to_bounds(mean + env.spec.action_table[a].displacement());
    const double d = distance(next, target);
    if (d < best_d) {
      best_d = d;
      best = a;
    }
  }
  return best;
}

namespace {

nlohmann::json state_to_json(StateVec s) {
  return nlohmann::json::array({s.x, s.y});
}

}  // namespace

nlohmann::json belief_snapshot_to_json(const BeliefSnapshot& snap) {
  nlohmann::json particles = nlohmann::json::array();
  for (const StateVec& p : snap.particles) particles.push_back(state_to_json(p));
  return {{"step_index", snap.step_index},
          {"particles", particles},
          {"weights", snap.weights},
          {"mean", state_to_json(snap.mean)}};
}

nlohmann::json episode_to_json(const EpisodeRecord& rec) {
  nlohmann::json j{{"seed", rec.seed},
                   {"episode", rec.episode_index},
                   {"success", rec.success},
                   {"terminal_status", rec.terminal_status},
                   {"steps", rec.steps},
                   {"reward", rec.reward_total},
                   {"mean_particle_distance", rec.mean_particle_distance},
                   {"mean_plan_time_s", rec.mean_plan_time_s},
                   {"mean_filter_time_s", rec.mean_filter_time_s},
                   {"trap_entries", rec.trap_entries},
                   {"degeneracy_events", rec.degeneracy_events}};
  if (!rec.trace.empty()) {
    nlohmann::json steps = nlohmann::json::array();
    for (const StepRecord& s : rec.trace) {
      steps.push_back({{"t", s.t},
                       {"state", state_to_json(s.state)},
                       {"next", state_to_json(s.next)},
                       {"action", s.action},
                       {"obs", s.obs},
                       {"reward", s.reward},
                       {"belief_mean", state_to_json(s.belief_mean)},
                       {"particle_distance", s.particle_distance},
                       {"plan_time_s", s.plan_time_s},
                       {"filter_time_s", s.filter_time_s}});
    }
    j["trace"] = std::move(steps);
  }
  if (!rec.snapshots.empty()) {
    nlohmann::json snaps = nlohmann::json::array();
    for (const BeliefSnapshot& s : rec.snapshots) {
      snaps.push_back(belief_snapshot_to_json(s));
    }
    j["belief_snapshots"] = std::move(snaps);
  }
  if (!rec.tree_diagnostics.empty()) j["tree_diagnostics"] = rec.tree_diagnostics;
  return j;
}

EpisodeRecord run_episode(const envs::Environment& env,
                          const EpisodeOptions& opts, std::uint64_t seed,
                          int episode_index) {
  if (env.spec.action_count() == 0) {
    throw std::invalid_argument("environment has an empty action table");
  }
  if (opts.planner == PlannerKind::kScripted && opts.script.empty()) {
    throw std::invalid_argument("scripted planner needs a non-empty script");
  }

  Rng episode_rng(seed);
  Rng start_rng = episode_rng.substream(0);
  Rng env_rng = episode_rng.substream(1);
  Rng filter_rng = episode_rng.substream(2);
  Rng planner_rng = episode_rng.substream(3);

  EpisodeRecord rec;
  rec.seed = seed;
  rec.episode_index = episode_index;

  StateVec s = opts.start_state ? *opts.start_state : env.sample_start(start_rng);

  filter::FilterEvents events;
  filter::ParticleBelief belief =
      filter::init_belief(env.map, opts.filter, filter_rng);

  // Navigation maps get the collapse rollout; goal-free fixtures fall back
  // to a zero leaf estimate.
  const bool has_goal = !env.map.regions_of(RegionKind::kGoal).empty();
  planner::PftDpwPlanner planner(
      env.spec, env.model, opts.plan,
      has_goal ? planner::make_collapse_rollout(env.spec, env.map,
                                                opts.plan.gamma)
               : planner::make_zero_rollout());

  const bool keep_trace = opts.keep_trace || opts.keep_snapshots;
  double dist_sum = 0.0;
  double plan_time_sum = 0.0;
  double filter_time_sum = 0.0;
  rec.terminal_status = "step_limit";

  for (int t = 0; t < env.spec.max_steps; ++t) {
    if (opts.keep_snapshots) {
      rec.snapshots.push_back({belief.step_index, belief.particles,
                               belief.weights, filter::belief_mean(belief)});
    }

    const double pdist = filter::particle_distance(belief, s);
    dist_sum += pdist;

    ActionId a = 0;
    double plan_time = 0.0;
    {
      const auto t0 = Clock::now();
      switch (opts.planner) {
        case PlannerKind::kPft:
          a = planner.plan(belief, planner_rng);
          break;
        case PlannerKind::kStraight:
          a = straight_to_goal_action(env, belief);
          break;
        case PlannerKind::kRandom:
          a = planner_rng.uniform_int(env.spec.action_count());
          break;
        case PlannerKind::kScripted:
          a = opts.script[std::min<std::size_t>(t, opts.script.size() - 1)];
          break;
      }
      if (opts.measure_time) {
        plan_time = std::chrono::duration<double>(Clock::now() - t0).count();
      }
    }
    plan_time_sum += plan_time;
    if (opts.tree_diagnostics && opts.planner == PlannerKind::kPft) {
      const auto d = planner.diagnostics();
      nlohmann::json root = nlohmann::json::array();
      for (const auto& ra : d.root_actions) {
        root.push_back({{"action", ra.action},
                        {"name", ra.name},
                        {"q", ra.q},
                        {"visits", ra.visits}});
      }
      rec.tree_diagnostics.push_back({{"t", t},
                                      {"tree_nodes", d.tree_nodes},
                                      {"chosen", d.chosen},
                                      {"root_actions", std::move(root)}});
    }

    const StepResult step =
        step_env(env.spec, env.map, env.truth, s, a, t, env_rng);
    if (env.map.in_trap(step.next)) ++rec.trap_entries;
    rec.reward_total += step.reward;

    double filter_time = 0.0;
    {
      const auto t0 = Clock::now();
      belief = filter::update(belief, a, step.obs, env.model, opts.filter,
                              filter_rng, &events);
      if (opts.measure_time) {
        filter_time = std::chrono::duration<double>(Clock::now() - t0).count();
      }
    }
    filter_time_sum += filter_time;

    if (keep_trace) {
      rec.trace.push_back({t, s, step.next, a, step.obs, step.reward,
                           filter::belief_mean(belief), pdist, plan_time,
                           filter_time});
    }

    s = step.next;
    rec.steps = t + 1;
    if (step.done) {
      if (env.model.terminal(step.next) == Terminal::kGoal) {
        rec.success = true;
        rec.terminal_status = "goal";
      }
      break;
    }
  }

  rec.degeneracy_events = events.degeneracy_recoveries;
  if (rec.steps > 0) {
    rec.mean_particle_distance = dist_sum / rec.steps;
    rec.mean_plan_time_s = plan_time_sum / rec.steps;
    rec.mean_filter_time_s = filter_time_sum / rec.steps;
  }
  return rec;
}

}  // namespace pft::bench
