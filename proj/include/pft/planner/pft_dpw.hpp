#pragma once

#include <string>
#include <vector>

#include "pft/core/model_suite.hpp"
#include "pft/filter/particle_belief.hpp"
#include "pft/planner/params.hpp"
#include "pft/planner/rollout.hpp"

namespace pft::planner {

/// Result of one generative belief step inside the tree.
struct GenPfResult {
  filter::ParticleBelief belief;
  ObsVec obs;
  double reward = 0.0;
  bool degenerate = false;  // all reweighted weights underflowed
};

/// Vectorized particle step for the search tree: advance every particle,
/// sample one observation from a weight-proportional particle, reweight by
/// the observation density, and accumulate the weighted one-step reward.
/// Particles already at a goal-terminal state are frozen: no transition
/// and no further reward. The belief is resampled to equal weights when
/// the effective sample size drops below half the particle count.
GenPfResult gen_pf(const filter::ParticleBelief& b, ActionId a,
                   const ModelSuite& models, Rng& rng);

struct ActionEdge {
  ActionId action = 0;
  int visits = 0;       // N(b, a)
  double q = 0.0;       // running mean of backed-up totals
  std::vector<int> children;        // belief node ids
  std::vector<double> child_reward; // stored one-step reward per child
};

struct BeliefNode {
  filter::ParticleBelief belief;
  int visits = 1;  // N(b); creation counts as the initial visit
  bool terminal = false;
  std::vector<ActionEdge> edges;
};

struct BackupEntry {
  int node = 0;
  int edge = 0;
  double total = 0.0;
};

struct SearchTree {
  std::vector<BeliefNode> nodes;
  std::vector<BackupEntry> backups;  // populated when record_backups is set

  const BeliefNode& root() const { return nodes.front(); }
};

struct PlanDiagnostics {
  int tree_nodes = 0;
  int iterations = 0;
  ActionId chosen = 0;
  struct RootAction {
    ActionId action;
    std::string name;
    double q;
    int visits;
  };
  std::vector<RootAction> root_actions;
};

/// UCB1 selection over a node's existing action edges:
/// argmax Q + c * sqrt(log N(b) / N(b,a)); unvisited edges have infinite
/// bonus and win immediately, lowest action id first. Returns the edge
/// index. Requires at least one edge.
int ucb_select(const BeliefNode& node, double c);

/// Online PFT-DPW search over particle beliefs. One instance per
/// environment; plan() builds a fresh tree per call and is deterministic
/// in (belief, rng state).
class PftDpwPlanner {
 public:
  PftDpwPlanner(const PomdpSpec& spec, ModelSuite models, PlannerParams params,
                RolloutPolicy rollout);

  /// Runs n_iter simulation passes from b0 (resampled to m particles if
  /// needed) and returns the root action with the highest mean value among
  /// visited actions, ties broken by lowest action id.
  ActionId plan(const filter::ParticleBelief& b0, Rng& rng);

  /// Tree from the most recent plan() call.
  const SearchTree& tree() const { return tree_; }
  PlanDiagnostics diagnostics() const;
  int degenerate_reweights() const { return degenerate_reweights_; }

  const PlannerParams& params() const { return params_; }

 private:
  int new_node(filter::ParticleBelief belief);
  double simulate(int node_id, int depth, Rng& rng);

  PomdpSpec spec_;
  ModelSuite models_;
  PlannerParams params_;
  RolloutPolicy rollout_;
  SearchTree tree_;
  ActionId last_chosen_ = 0;
  int degenerate_reweights_ = 0;
};

}  // namespace pft::planner
