#include "pft/planner/pft_dpw.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <utility>

namespace pft::planner {

bool dpw_allows(int child_count, double k, double alpha, int visits) {
  return static_cast<double>(child_count) <=
         k * std::pow(static_cast<double>(visits), alpha);
}

GenPfResult gen_pf(const filter::ParticleBelief& b, ActionId a,
                   const ModelSuite& models, Rng& rng) {
  const std::size_t m = b.size();
  assert(m > 0);

  GenPfResult out;
  out.belief.step_index = b.step_index + 1;
  out.belief.particles.reserve(m);
  out.belief.weights.reserve(m);

  std::vector<bool> frozen(m);
  double reward = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    frozen[i] = models.terminal(b.particles[i]) == Terminal::kGoal;
    if (frozen[i]) {
      out.belief.particles.push_back(b.particles[i]);
    } else {
      const StateVec s = models.transition(b.particles[i], a, rng);
      reward += b.weights[i] * models.reward(b.particles[i], a, s);
      out.belief.particles.push_back(s);
    }
  }
  out.reward = reward;

  // Observation from one weight-proportional particle.
  std::size_t j = m - 1;
  double pick = rng.uniform();
  for (std::size_t i = 0; i < m; ++i) {
    pick -= b.weights[i];
    if (pick < 0.0) {
      j = i;
      break;
    }
  }
  out.obs = models.obs_generator(out.belief.particles[j], rng);

  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double w =
        b.weights[i] * models.obs_density(out.obs, out.belief.particles[i]);
    out.belief.weights.push_back(w);
    sum += w;
  }
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    out.degenerate = true;
    const double w = 1.0 / static_cast<double>(m);
    for (double& x : out.belief.weights) x = w;
  } else {
    for (double& x : out.belief.weights) x /= sum;
  }

  if (filter::effective_sample_size(out.belief) <
      0.5 * static_cast<double>(m)) {
    out.belief = filter::systematic_resample(out.belief, m, rng);
  }
  return out;
}

int ucb_select(const BeliefNode& node, double c) {
  assert(!node.edges.empty());
  const double log_n = std::log(static_cast<double>(node.visits));
  int best = -1;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < node.edges.size(); ++i) {
    const ActionEdge& e = node.edges[i];
    if (e.visits == 0) return static_cast<int>(i);  // edges are in id order
    const double score =
        e.q + c * std::sqrt(log_n / static_cast<double>(e.visits));
    if (score > best_score) {
      best_score = score;
      best = static_cast<int>(i);
    }
  }
  return best;
}

PftDpwPlanner::PftDpwPlanner(const PomdpSpec& spec, ModelSuite models,
                             PlannerParams params, RolloutPolicy rollout)
    : spec_(spec),
      models_(std::move(models)),
      params_(params),
      rollout_(std::move(rollout)) {}

int PftDpwPlanner::new_node(filter::ParticleBelief belief) {
  BeliefNode node;
  node.terminal = true;
  for (const StateVec& p : belief.particles) {
    if (models_.terminal(p) != Terminal::kGoal) {
      node.terminal = false;
      break;
    }
  }
  node.belief = std::move(belief);
  tree_.nodes.push_back(std::move(node));
  return static_cast<int>(tree_.nodes.size()) - 1;
}

double PftDpwPlanner::simulate(int node_id, int depth, Rng& rng) {
  if (depth <= 0) return 0.0;
  if (tree_.nodes[node_id].terminal) return 0.0;

  // Action progressive widening: untried actions join in table order.
  {
    BeliefNode& node = tree_.nodes[node_id];
    const int tried = static_cast<int>(node.edges.size());
    if (tried < spec_.action_count() &&
        dpw_allows(tried, params_.k_action, params_.alpha_action,
                   node.visits)) {
      ActionEdge e;
      e.action = tried;
      node.edges.push_back(e);
    }
  }

  const int edge_idx = ucb_select(tree_.nodes[node_id], params_.c);
  const ActionId action = tree_.nodes[node_id].edges[edge_idx].action;

  double total = 0.0;
  const int obs_children =
      static_cast<int>(tree_.nodes[node_id].edges[edge_idx].children.size());
  const int edge_visits = tree_.nodes[node_id].edges[edge_idx].visits;
  if (dpw_allows(obs_children, params_.k_obs, params_.alpha_obs,
                 edge_visits)) {
    GenPfResult gen =
        gen_pf(tree_.nodes[node_id].belief, action, models_, rng);
    if (gen.degenerate) ++degenerate_reweights_;
    const double leaf =
        rollout_(gen.belief, depth - 1, rng);
    const int child = new_node(std::move(gen.belief));
    // new_node may reallocate; re-acquire references below.
    ActionEdge& e = tree_.nodes[node_id].edges[edge_idx];
    e.children.push_back(child);
    e.child_reward.push_back(gen.reward);
    total = gen.reward + params_.gamma * leaf;
  } else {
    ActionEdge& e = tree_.nodes[node_id].edges[edge_idx];
    const int pick = rng.uniform_int(static_cast<int>(e.children.size()));
    const int child = e.children[pick];
    const double r = e.child_reward[pick];
    total = r + params_.gamma * simulate(child, depth - 1, rng);
  }

  BeliefNode& node = tree_.nodes[node_id];
  ActionEdge& e = node.edges[edge_idx];
  node.visits += 1;
  e.visits += 1;
  e.q += (total - e.q) / static_cast<double>(e.visits);
  if (params_.record_backups) {
    tree_.backups.push_back({node_id, edge_idx, total});
  }
  return total;
}

ActionId PftDpwPlanner::plan(const filter::ParticleBelief& b0, Rng& rng) {
  assert(b0.valid());
  tree_.nodes.clear();
  tree_.backups.clear();

  filter::ParticleBelief root = b0;
  if (static_cast<int>(root.size()) != params_.m_particles) {
    root = filter::systematic_resample(
        root, static_cast<std::size_t>(params_.m_particles), rng);
  }
  new_node(std::move(root));

  for (int i = 0; i < params_.n_iter; ++i) {
    simulate(0, params_.max_depth, rng);
  }

  // Max-Q over visited root actions, lowest id on ties. A fully terminal
  // root never widens; fall back to action 0.
  const BeliefNode& r = tree_.nodes.front();
  ActionId best = 0;
  double best_q = -std::numeric_limits<double>::infinity();
  for (const ActionEdge& e : r.edges) {
    if (e.visits > 0 && e.q > best_q) {
      best_q = e.q;
      best = e.action;
    }
  }
  last_chosen_ = best;
  return best;
}

PlanDiagnostics PftDpwPlanner::diagnostics() const {
  PlanDiagnostics d;
  d.tree_nodes = static_cast<int>(tree_.nodes.size());
  d.iterations = params_.n_iter;
  d.chosen = last_chosen_;
  if (!tree_.nodes.empty()) {
    for (const ActionEdge& e : tree_.nodes.front().edges) {
      const std::string name =
          e.action < spec_.action_count() ? spec_.action_table[e.action].name
                                          : std::string();
      d.root_actions.push_back({e.action, name, e.q, e.visits});
    }
  }
  return d;
}

}  // namespace pft::planner
