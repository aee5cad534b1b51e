#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "pft/core/dynamics.hpp"
#include "pft/envs/floor.hpp"
#include "pft/envs/tiger.hpp"
#include "pft/planner/pft_dpw.hpp"

using namespace pft;
using filter::ParticleBelief;
using planner::PftDpwPlanner;
using planner::PlannerParams;

namespace {

ParticleBelief point_belief(StateVec s, int count) {
  ParticleBelief b;
  b.particles.assign(count, s);
  b.weights.assign(count, 1.0 / count);
  return b;
}

/// Exhaustive depth-d expectimax on a deterministic environment with a
/// point-mass belief; the independent oracle for small planning cases.
double expectimax(const envs::Environment& env, StateVec s, int depth,
                  double gamma, ActionId* best_action = nullptr) {
  if (depth == 0) return 0.0;
  double best = -1e300;
  ActionId best_a = 0;
  Rng dummy(0);  // transitions are deterministic in these fixtures
  for (ActionId a = 0; a < env.spec.action_count(); ++a) {
    const StateVec next = env.model.transition(s, a, dummy);
    const double r = env.model.reward(s, a, next);
    double v = r;
    if (env.model.terminal(next) != Terminal::kGoal) {
      v += gamma * expectimax(env, next, depth - 1, gamma);
    }
    if (v > best) {
      best = v;
      best_a = a;
    }
  }
  if (best_action) *best_action = best_a;
  return best;
}

}  // namespace

TEST_CASE("dpw widening gate") {
  // visits=1 with k=3 allows up to three children before blocking.
  CHECK(planner::dpw_allows(0, 3.0, 0.25, 1));
  CHECK(planner::dpw_allows(3, 3.0, 0.25, 1));
  CHECK_FALSE(planner::dpw_allows(4, 3.0, 0.25, 1));
  // N(b,a)=16, k_o=4, alpha=0.25 -> bound 8.
  CHECK(planner::dpw_allows(8, 4.0, 0.25, 16));
  CHECK_FALSE(planner::dpw_allows(9, 4.0, 0.25, 16));
  // First visit of a fresh edge always opens a child.
  CHECK(planner::dpw_allows(0, 4.0, 0.25, 0));
}

TEST_CASE("ucb_select") {
  planner::BeliefNode node;
  node.visits = 4;

  SUBCASE("unvisited edge wins immediately") {
    planner::ActionEdge e0;
    e0.action = 0;
    e0.visits = 2;
    e0.q = 100.0;
    planner::ActionEdge e1;
    e1.action = 1;
    e1.visits = 0;
    node.edges = {e0, e1};
    CHECK(planner::ucb_select(node, 10.0) == 1);
  }

  SUBCASE("equal values prefer the less-visited edge") {
    planner::ActionEdge e0;
    e0.action = 0;
    e0.visits = 1;
    e0.q = 5.0;
    planner::ActionEdge e1;
    e1.action = 1;
    e1.visits = 3;
    e1.q = 5.0;
    node.edges = {e0, e1};
    CHECK(planner::ucb_select(node, 10.0) == 0);
  }

  SUBCASE("value breaks exploration ties") {
    node.visits = 2;
    planner::ActionEdge e0;
    e0.action = 0;
    e0.visits = 1;
    e0.q = 10.0;
    planner::ActionEdge e1;
    e1.action = 1;
    e1.visits = 1;
    e1.q = 0.0;
    node.edges = {e0, e1};
    // Scores: 10 + 10*sqrt(log 2) vs 0 + 10*sqrt(log 2).
    CHECK(planner::ucb_select(node, 10.0) == 0);
  }
}

TEST_CASE("gen_pf") {
  const auto env = envs::make_floor_env();

  SUBCASE("constant density leaves weights unchanged") {
    ModelSuite suite = env.model;
    suite.obs_density = [](const ObsVec&, const StateVec&) { return 1.0; };
    ParticleBelief b;
    b.particles = {{0.50, 0.25}, {0.52, 0.25}, {0.48, 0.27}};
    b.weights = {0.5, 0.3, 0.2};
    Rng rng(3);
    const auto out = planner::gen_pf(b, 0, suite, rng);
    REQUIRE(out.belief.size() == 3);
    CHECK(out.belief.weights[0] == doctest::Approx(0.5));
    CHECK(out.belief.weights[1] == doctest::Approx(0.3));
    CHECK(out.belief.weights[2] == doctest::Approx(0.2));
  }

  SUBCASE("identical particles in free space give zero reward") {
    ParticleBelief b = point_belief({0.50, 0.25}, 8);
    Rng rng(4);
    const auto out = planner::gen_pf(b, 0, env.model, rng);
    CHECK(out.reward == doctest::Approx(0.0));
  }

  SUBCASE("3:1 density ratio reweights to (0.75, 0.25)") {
    ModelSuite suite = env.model;
    suite.obs_density = [](const ObsVec&, const StateVec& s) {
      return s.x < 0.5 ? 3.0 : 1.0;
    };
    suite.transition = [](const StateVec& s, ActionId, Rng&) { return s; };
    ParticleBelief b;
    b.particles = {{0.4, 0.25}, {0.6, 0.25}};
    b.weights = {0.5, 0.5};
    Rng rng(5);
    const auto out = planner::gen_pf(b, 0, suite, rng);
    CHECK(out.belief.weights[0] == doctest::Approx(0.75));
    CHECK(out.belief.weights[1] == doctest::Approx(0.25));
  }

  SUBCASE("goal particles are frozen and pay nothing further") {
    ParticleBelief b;
    b.particles = {{0.02, 0.75}, {0.30, 0.75}};  // first is inside goal_top
    b.weights = {0.5, 0.5};
    Rng rng(6);
    const auto out = planner::gen_pf(b, 4 /*W*/, env.model, rng);
    CHECK(out.belief.particles[0] == b.particles[0]);  // frozen in place
    CHECK(out.reward == doctest::Approx(0.0));         // no re-entry reward
  }

  SUBCASE("zero densities fall back to uniform weights") {
    ModelSuite suite = env.model;
    suite.obs_density = [](const ObsVec&, const StateVec&) { return 0.0; };
    ParticleBelief b = point_belief({0.5, 0.25}, 4);
    Rng rng(7);
    const auto out = planner::gen_pf(b, 0, suite, rng);
    CHECK(out.degenerate);
    for (double w : out.belief.weights) CHECK(w == doctest::Approx(0.25));
  }
}

TEST_CASE("rollout_collapse") {
  const auto env = envs::make_floor_env();
  Rng rng(8);

  SUBCASE("all particles in the goal score the full reward") {
    ParticleBelief b;
    b.particles = {{0.02, 0.72}, {0.03, 0.78}};
    b.weights = {0.5, 0.5};
    const double v =
        planner::rollout_collapse(b, 5, env.spec, env.map, 0.99, rng);
    CHECK(v == doctest::Approx(100.0));
  }

  SUBCASE("single particle five steps out") {
    ParticleBelief b = point_belief({0.30, 0.75}, 1);  // 0.25 to goal edge
    const double v =
        planner::rollout_collapse(b, 5, env.spec, env.map, 0.99, rng);
    CHECK(v == doctest::Approx(100.0 * std::pow(0.99, 5)).epsilon(1e-9));
  }

  SUBCASE("goal and trap endpoints cancel at equal weight") {
    // Symmetric fixture: whichever particle is drawn, the other lands in a
    // trap at the same displacement, so the payout is exactly zero.
    EnvMap sym;
    sym.bounds = {-1.0, -1.0, 3.0, 3.0};
    sym.regions = {
        {"goal", RegionKind::kGoal, {0.95, 0.95, 1.05, 1.05}},
        {"trap_r", RegionKind::kTrap, {1.90, 0.95, 2.00, 1.05}},
        {"trap_l", RegionKind::kTrap, {0.00, 0.95, 0.10, 1.05}},
    };
    ParticleBelief b;
    b.particles = {{0.5, 1.0}, {1.5, 1.0}};
    b.weights = {0.5, 0.5};
    for (int rep = 0; rep < 8; ++rep) {
      Rng r(100 + rep);
      CHECK(planner::rollout_collapse(b, 5, env.spec, sym, 0.99, r) ==
            doctest::Approx(0.0).epsilon(1e-9));
    }
  }

  SUBCASE("depth zero returns nothing") {
    ParticleBelief b = point_belief({0.30, 0.75}, 1);
    CHECK(planner::rollout_collapse(b, 0, env.spec, env.map, 0.99, rng) == 0.0);
  }
}

TEST_CASE("plan returns a valid action and is deterministic") {
  const auto env = envs::make_floor_env();
  PlannerParams params;
  params.n_iter = 1;
  PftDpwPlanner planner(
      env.spec, env.model, params,
      planner::make_collapse_rollout(env.spec, env.map, params.gamma));
  Rng rng(9);
  const ParticleBelief b = point_belief({0.50, 0.25}, 100);
  const ActionId a = planner.plan(b, rng);
  CHECK(a >= 0);
  CHECK(a < env.spec.action_count());

  PlannerParams full;
  PftDpwPlanner p1(env.spec, env.model, full,
                   planner::make_collapse_rollout(env.spec, env.map, full.gamma));
  PftDpwPlanner p2(env.spec, env.model, full,
                   planner::make_collapse_rollout(env.spec, env.map, full.gamma));
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    Rng r1(seed), r2(seed);
    const ActionId a1 = p1.plan(b, r1);
    const ActionId a2 = p2.plan(b, r2);
    CHECK(a1 == a2);
    CHECK(p1.tree().nodes.size() == p2.tree().nodes.size());
  }
}

TEST_CASE("planner heads straight for a known goal") {
  const auto env = envs::make_floor_env();
  // All particles on the top floor, goal at the left end.
  const ParticleBelief b = point_belief({0.10, 0.75}, 100);

  ActionId oracle_action = 0;
  expectimax(env, {0.10, 0.75}, 3, 0.99, &oracle_action);
  CHECK(oracle_action == 4);  // W

  PlannerParams params;
  PftDpwPlanner planner(
      env.spec, env.model, params,
      planner::make_collapse_rollout(env.spec, env.map, params.gamma));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    CHECK(planner.plan(b, rng) == oracle_action);
  }
}

TEST_CASE("tree structure invariants hold after search") {
  const auto env = envs::make_floor_env();
  PlannerParams params;
  params.n_iter = 300;
  params.record_backups = true;
  PftDpwPlanner planner(
      env.spec, env.model, params,
      planner::make_collapse_rollout(env.spec, env.map, params.gamma));
  Rng rng(10);
  const auto belief = point_belief({0.45, 0.25}, 100);
  planner.plan(belief, rng);

  const planner::SearchTree& tree = planner.tree();
  REQUIRE(!tree.nodes.empty());
  CHECK(tree.nodes.front().visits == params.n_iter + 1);

  for (const auto& node : tree.nodes) {
    int edge_visits = 0;
    CHECK(static_cast<int>(node.edges.size()) <=
          static_cast<int>(std::ceil(
              params.k_action *
              std::pow(static_cast<double>(node.visits), params.alpha_action))));
    for (const auto& e : node.edges) {
      edge_visits += e.visits;
      CHECK(static_cast<int>(e.children.size()) <=
            static_cast<int>(std::ceil(
                params.k_obs *
                std::pow(std::max(1.0, static_cast<double>(e.visits)),
                         params.alpha_obs))));
      CHECK(e.children.size() == e.child_reward.size());
    }
    if (!node.edges.empty()) {
      CHECK(edge_visits == node.visits - 1);
    }
  }

  // Backup audit: Q(b,a) must equal the mean of the totals backed up
  // through the edge, and N(b,a) their count.
  std::map<std::pair<int, int>, std::pair<int, double>> replay;
  for (const auto& entry : tree.backups) {
    auto& [count, sum] = replay[{entry.node, entry.edge}];
    ++count;
    sum += entry.total;
  }
  int audited = 0;
  for (std::size_t n = 0; n < tree.nodes.size(); ++n) {
    for (std::size_t e = 0; e < tree.nodes[n].edges.size(); ++e) {
      const auto& edge = tree.nodes[n].edges[e];
      if (edge.visits == 0) continue;
      const auto it = replay.find({static_cast<int>(n), static_cast<int>(e)});
      REQUIRE(it != replay.end());
      CHECK(it->second.first == edge.visits);
      CHECK(edge.q ==
            doctest::Approx(it->second.second / edge.visits).epsilon(1e-9));
      ++audited;
    }
  }
  CHECK(audited > 0);
}

TEST_CASE("argmax is invariant to joint positive scaling of rewards and c") {
  const auto base = envs::make_floor_env();
  const double scale = 4.0;  // power of two keeps the scaling exact

  envs::Environment scaled = base;
  scaled.spec.goal_reward *= scale;
  scaled.spec.trap_penalty *= scale;
  auto inner = base.model.reward;
  scaled.model.reward = [inner, scale](const StateVec& s, ActionId a,
                                       const StateVec& next) {
    return scale * inner(s, a, next);
  };

  PlannerParams params;
  PlannerParams scaled_params = params;
  scaled_params.c *= scale;

  PftDpwPlanner p1(base.spec, base.model, params,
                   planner::make_collapse_rollout(base.spec, base.map,
                                                  params.gamma));
  PftDpwPlanner p2(scaled.spec, scaled.model, scaled_params,
                   planner::make_collapse_rollout(scaled.spec, scaled.map,
                                                  params.gamma));

  Rng belief_rng(12);
  ParticleBelief b;
  for (int i = 0; i < 100; ++i) {
    b.particles.push_back(
        {belief_rng.uniform(0.45, 0.55), belief_rng.uniform(0.20, 0.30)});
  }
  b.weights.assign(100, 0.01);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng r1(seed), r2(seed);
    CHECK(p1.plan(b, r1) == p2.plan(b, r2));
  }
}

TEST_CASE("tiger fixture posterior and exact solver agree with hand results") {
  const auto fx = envs::tiger_fixture();
  const envs::TigerSolver solver(fx.cfg);

  SUBCASE("listen posterior after one reading") {
    CHECK(solver.listen_posterior(0.5, true) == doctest::Approx(0.85));
    CHECK(solver.listen_posterior(0.5, false) == doctest::Approx(0.15));
  }

  SUBCASE("full information opens the tiger-free door") {
    CHECK(solver.best_action(0.0, 10) == envs::kTigerOpenRight);
    CHECK(solver.best_action(1.0, 10) == envs::kTigerOpenLeft);
  }

  SUBCASE("uniform belief listens") {
    CHECK(solver.best_action(0.5, 2) == envs::kTigerListen);
    CHECK(solver.best_action(0.5, 10) == envs::kTigerListen);
  }

  SUBCASE("value grows with horizon and is finite") {
    const double v2 = solver.value(0.5, 2);
    const double v10 = solver.value(0.5, 10);
    CHECK(v10 >= v2);
    CHECK(std::isfinite(v10));
  }
}

TEST_CASE("planner chooses listen at the uniform tiger belief") {
  const auto fx = envs::tiger_fixture();
  PlannerParams params;
  params.n_iter = 2000;
  PftDpwPlanner planner(fx.spec, fx.models, params,
                        planner::make_zero_rollout());
  const ParticleBelief b = fx.belief(0.5, 100);
  int listens = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    listens += planner.plan(b, rng) == envs::kTigerListen;
  }
  CHECK(listens >= 9);
}

TEST_CASE("terminal root falls back to the first action") {
  const auto env = envs::make_floor_env();
  PlannerParams params;
  PftDpwPlanner planner(
      env.spec, env.model, params,
      planner::make_collapse_rollout(env.spec, env.map, params.gamma));
  Rng rng(13);
  const ParticleBelief b = point_belief({0.02, 0.75}, 100);  // inside goal
  CHECK(planner.plan(b, rng) == 0);
  CHECK(planner.tree().nodes.front().terminal);
}
