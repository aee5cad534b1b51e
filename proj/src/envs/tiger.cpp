#include "pft/envs/tiger.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace pft::envs {
namespace {

bool is_right(const StateVec& s) { return s.x > 0.5; }
StateVec tiger_state(bool right) { return {right ? 1.0 : 0.0, 0.0}; }

}  // namespace

TigerSolver::TigerSolver(const TigerConfig& cfg, int grid_points)
    : cfg_(cfg), grid_(grid_points) {
  values_.push_back(std::vector<double>(grid_, 0.0));  // horizon 0
}

double TigerSolver::interp(const std::vector<double>& v, double p) const {
  const double x = std::clamp(p, 0.0, 1.0) * (grid_ - 1);
  const int i = std::min(static_cast<int>(x), grid_ - 2);
  const double f = x - i;
  return (1.0 - f) * v[i] + f * v[i + 1];
}

double TigerSolver::listen_posterior(double p, bool heard_right) const {
  const double acc = cfg_.listen_accuracy;
  const double like_right = heard_right ? acc : 1.0 - acc;
  const double like_left = heard_right ? 1.0 - acc : acc;
  const double denom = like_right * p + like_left * (1.0 - p);
  return like_right * p / denom;
}

void TigerSolver::ensure(int horizon) const {
  const double acc = cfg_.listen_accuracy;
  while (static_cast<int>(values_.size()) <= horizon) {
    const std::vector<double>& prev = values_.back();
    std::vector<double> cur(grid_);
    // Value of the post-reset belief: uniform prior, then one reading.
    const double reset_cont =
        0.5 * interp(prev, acc) + 0.5 * interp(prev, 1.0 - acc);
    for (int i = 0; i < grid_; ++i) {
      const double p = static_cast<double>(i) / (grid_ - 1);  // P(right)
      const double p_hear_right = acc * p + (1.0 - acc) * (1.0 - p);
      const double q_listen =
          cfg_.listen_reward +
          cfg_.discount *
              (p_hear_right * interp(prev, listen_posterior(p, true)) +
               (1.0 - p_hear_right) * interp(prev, listen_posterior(p, false)));
      const double q_open_left = (1.0 - p) * cfg_.tiger_penalty +
                                 p * cfg_.correct_open_reward +
                                 cfg_.discount * reset_cont;
      const double q_open_right = p * cfg_.tiger_penalty +
                                  (1.0 - p) * cfg_.correct_open_reward +
                                  cfg_.discount * reset_cont;
      cur[i] = std::max({q_listen, q_open_left, q_open_right});
    }
    values_.push_back(std::move(cur));
  }
}

double TigerSolver::value(double p_right, int horizon) const {
  ensure(horizon);
  return interp(values_[horizon], p_right);
}

ActionId TigerSolver::best_action(double p_right, int horizon) const {
  assert(horizon >= 1);
  ensure(horizon - 1);
  const double acc = cfg_.listen_accuracy;
  const std::vector<double>& prev = values_[horizon - 1];
  const double p = p_right;
  const double p_hear_right = acc * p + (1.0 - acc) * (1.0 - p);
  const double reset_cont =
      0.5 * interp(prev, acc) + 0.5 * interp(prev, 1.0 - acc);
  const double q_listen =
      cfg_.listen_reward +
      cfg_.discount *
          (p_hear_right * interp(prev, listen_posterior(p, true)) +
           (1.0 - p_hear_right) * interp(prev, listen_posterior(p, false)));
  const double q_open_left = (1.0 - p) * cfg_.tiger_penalty +
                             p * cfg_.correct_open_reward +
                             cfg_.discount * reset_cont;
  const double q_open_right = p * cfg_.tiger_penalty +
                              (1.0 - p) * cfg_.correct_open_reward +
                              cfg_.discount * reset_cont;
  if (q_listen >= q_open_left && q_listen >= q_open_right) return kTigerListen;
  return q_open_left >= q_open_right ? kTigerOpenLeft : kTigerOpenRight;
}

filter::ParticleBelief TigerFixture::belief(double p_right, int count) const {
  filter::ParticleBelief b;
  const int n_right = static_cast<int>(std::lround(p_right * count));
  for (int i = 0; i < count; ++i) {
    b.particles.push_back(tiger_state(i < n_right));
  }
  b.weights.assign(count, 1.0 / count);
  return b;
}

TigerFixture tiger_fixture(const TigerConfig& cfg) {
  TigerFixture fx;
  fx.cfg = cfg;
  fx.spec.action_table = {
      {"listen", 0.0, 0.0, 0.0},
      {"open-left", 0.0, 0.0, 0.0},
      {"open-right", 0.0, 0.0, 0.0},
  };
  fx.spec.discount = cfg.discount;
  fx.spec.max_steps = 200;
  fx.spec.goal_reward = cfg.correct_open_reward;
  fx.spec.trap_penalty = cfg.tiger_penalty;

  fx.models.transition = [](const StateVec& s, ActionId a, Rng& rng) {
    if (a == kTigerListen) return s;
    return tiger_state(rng.uniform() < 0.5);  // opening resets the door
  };
  const double acc = cfg.listen_accuracy;
  fx.models.obs_generator = [acc](const StateVec& s, Rng& rng) {
    const bool truth = is_right(s);
    const bool heard = rng.uniform() < acc ? truth : !truth;
    return ObsVec{heard ? 1.0 : 0.0};
  };
  fx.models.obs_density = [acc](const ObsVec& o, const StateVec& s) {
    const bool heard_right = o[0] > 0.5;
    return heard_right == is_right(s) ? acc : 1.0 - acc;
  };
  fx.models.proposer = [acc](const ObsVec& o, Rng& rng) {
    const bool heard_right = o[0] > 0.5;
    return tiger_state(rng.uniform() < acc ? heard_right : !heard_right);
  };
  fx.models.reward = [cfg](const StateVec& s, ActionId a, const StateVec&) {
    if (a == kTigerListen) return cfg.listen_reward;
    const bool tiger_right = is_right(s);
    const bool opened_right = a == kTigerOpenRight;
    return opened_right == tiger_right ? cfg.tiger_penalty
                                       : cfg.correct_open_reward;
  };
  fx.models.terminal = [](const StateVec&) { return Terminal::kNone; };
  return fx;
}

Environment tiger_environment(const TigerConfig& cfg) {
  const TigerFixture fx = tiger_fixture(cfg);
  Environment env;
  env.name = "tiger";
  env.spec = fx.spec;
  env.map.bounds = {0.0, 0.0, 1.0, 1.0};
  env.map.regions = {{"start", RegionKind::kStart, {0.0, 0.0, 1.0, 1.0}}};
  env.model = fx.models;
  env.truth = fx.models;
  env.sample_start = [](Rng& rng) { return StateVec{rng.uniform() < 0.5 ? 0.0 : 1.0, 0.0}; };
  return env;
}

}  // namespace pft::envs
