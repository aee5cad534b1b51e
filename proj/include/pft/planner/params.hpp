#pragma once

namespace pft::planner {

struct PlannerParams {
  int n_iter = 100;        // tree-search iterations per plan
  double c = 10.0;         // UCB exploration constant
  double k_action = 3.0;   // action progressive widening
  double alpha_action = 0.25;
  double k_obs = 4.0;      // observation progressive widening
  double alpha_obs = 0.25;
  int m_particles = 100;   // tree-belief particle count
  int max_depth = 10;      // H
  double gamma = 0.99;     // planning discount
  bool record_backups = false;  // keep a per-edge backup log for audits
};

/// Double-progressive-widening gate: a new child may be added while
/// child_count <= k * visits^alpha.
bool dpw_allows(int child_count, double k, double alpha, int visits);

}  // namespace pft::planner
