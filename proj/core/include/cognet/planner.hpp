#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cognet/coverage_secondary.hpp"
#include "cognet/scenario.hpp"

namespace cognet {

struct QoSConstraint {
  double p_star = 0.0;  // minimum primary coverage
  double s_star = 0.0;  // minimum secondary coverage
  double tau = 1.0;     // SINR threshold, linear

  std::vector<std::string> problems() const;
};

struct RhoGrid {
  double lo = 1e-15;  // W
  double hi = 1e-3;   // W
  int per_decade = 25;

  std::vector<double> points() const;
};

struct PlannerOptions {
  RhoGrid grid;
  // Placement averaging for random placements.
  std::int64_t n_placements = 10000;
  std::uint64_t seed = 1;
  int threads = 1;
  ProfileResolution resolution;
  // Relative width of the final bracket around rho-dagger.
  double rel_width = 0.01;
};

struct RhoTracePoint {
  double rho = 0.0;
  double p_cp = 0.0;
  std::optional<double> p_cs;  // not evaluated when the primary constraint already fails
  bool feasible = false;
};

struct RhoSearchResult {
  bool feasible = false;
  double rho_dagger = 0.0;  // W; meaningful only when feasible
  double p_cp = 0.0;
  double p_cs = 0.0;
  std::vector<RhoTracePoint> trace;  // grid scan, then refinement points
};

// Evaluates p_cs at several rho values for one tau. Fixed placements use a
// single profile; random placements average over seeded placements.
std::vector<double> secondary_coverage_curve(double tau, const Scenario& sc,
                                             const std::vector<double>& rhos,
                                             const PlannerOptions& opt = {});

// p_cp + p_cs at the scenario's rho.
double cumulative_performance(double tau, const Scenario& sc, const PlannerOptions& opt = {});

// Smallest rho with p_cp >= p_star and p_cs >= s_star: grid scan, then a
// geometric sub-grid between the last infeasible and first feasible points.
RhoSearchResult find_rho_dagger(const QoSConstraint& q, const Scenario& sc,
                                const PlannerOptions& opt = {});

struct TauGrid {
  double lo_db = -30.0;
  double hi_db = 30.0;
  double step_db = 0.1;

  std::vector<double> points_db() const;
};

// Largest tau on the dB grid where both constraints hold at the scenario's
// rho; q.tau is ignored. Uses monotonicity of both coverages in tau.
std::optional<double> feasible_tau_ceiling(const QoSConstraint& q, const Scenario& sc,
                                           const TauGrid& grid = {},
                                           const PlannerOptions& opt = {});

struct TradeoffPoint {
  double rho = 0.0;
  double p_cp = 0.0;
  double p_cs = 0.0;
};

struct TradeoffCurve {
  std::vector<TradeoffPoint> points;
  // Grid indices where p_cp increases or p_cs decreases by more than the
  // tolerance.
  std::vector<std::size_t> p_cp_violations;
  std::vector<std::size_t> p_cs_violations;
};

TradeoffCurve rho_tradeoff(double tau, const Scenario& sc, const PlannerOptions& opt = {},
                           double tolerance = 1e-9);

}  // namespace cognet
