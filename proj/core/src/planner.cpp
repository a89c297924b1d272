#include "cognet/planner.hpp"

#include <algorithm>
#include <cmath>

#include "cognet/coverage_primary.hpp"
#include "cognet/errors.hpp"
#include "cognet/parallel.hpp"

namespace cognet {

std::vector<std::string> QoSConstraint::problems() const {
  std::vector<std::string> out;
  if (!(p_star >= 0.0 && p_star <= 1.0)) out.emplace_back("qos.p_star must be in [0, 1]");
  if (!(s_star >= 0.0 && s_star <= 1.0)) out.emplace_back("qos.s_star must be in [0, 1]");
  if (!(tau > 0.0) || !std::isfinite(tau)) out.emplace_back("qos.tau must be > 0");
  return out;
}

std::vector<double> RhoGrid::points() const {
  if (!(lo > 0.0 && hi > lo) || per_decade < 1) throw DomainError("invalid rho grid");
  const double decades = std::log10(hi / lo);
  const auto n = static_cast<int>(std::lround(decades * per_decade));
  std::vector<double> out;
  out.reserve(n + 1);
  for (int i = 0; i <= n; ++i) out.push_back(lo * std::pow(10.0, static_cast<double>(i) / per_decade));
  out.back() = hi;
  return out;
}

std::vector<double> TauGrid::points_db() const {
  if (!(hi_db > lo_db) || !(step_db > 0.0)) throw DomainError("invalid tau grid");
  const auto n = static_cast<int>(std::floor((hi_db - lo_db) / step_db + 1e-9));
  std::vector<double> out;
  for (int i = 0; i <= n; ++i) out.push_back(lo_db + i * step_db);
  return out;
}

namespace {

std::vector<double> primary_curve(double tau, const Scenario& sc, const std::vector<double>& rhos,
                                  int threads) {
  std::vector<double> out(rhos.size());
  parallel_for(static_cast<std::int64_t>(rhos.size()), threads, [&](std::int64_t i) {
    Scenario s = sc;
    s.rho = rhos[i];
    out[i] = coverage_primary_simplified(tau, s);
  });
  return out;
}

void check(const QoSConstraint& q) {
  auto p = q.problems();
  if (!p.empty()) throw ConfigError(std::move(p));
}

}  // namespace

std::vector<double> secondary_coverage_curve(double tau, const Scenario& sc,
                                             const std::vector<double>& rhos,
                                             const PlannerOptions& opt) {
  std::vector<double> out;
  if (rhos.empty()) return out;
  if (sc.placement.is_random()) {
    const AveragedSecondaryCoverage avg(tau, sc, opt.n_placements, opt.seed, opt.threads,
                                        opt.resolution);
    for (const auto& e : avg.evaluate(rhos)) out.push_back(e.mean);
  } else {
    const SecondaryCoverageProfile prof(tau, sc, sc.placement.pose(), opt.resolution);
    for (double r : rhos) out.push_back(prof.evaluate(r).p_cs);
  }
  return out;
}

double cumulative_performance(double tau, const Scenario& sc, const PlannerOptions& opt) {
  const double p_cp = coverage_primary_simplified(tau, sc);
  if (!sc.placement.is_random()) return p_cp + coverage_secondary(tau, sc);
  return p_cp + secondary_coverage_curve(tau, sc, {sc.rho}, opt).front();
}

RhoSearchResult find_rho_dagger(const QoSConstraint& q, const Scenario& sc,
                                const PlannerOptions& opt) {
  check(q);
  sc.validate();
  RhoSearchResult res;
  const std::vector<double> grid = opt.grid.points();
  const std::vector<double> p_cp = primary_curve(q.tau, sc, grid, opt.threads);

  std::vector<double> candidates;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (p_cp[i] >= q.p_star) candidates.push_back(grid[i]);
  const std::vector<double> p_cs = secondary_coverage_curve(q.tau, sc, candidates, opt);

  std::size_t next = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RhoTracePoint t{grid[i], p_cp[i], std::nullopt, false};
    if (p_cp[i] >= q.p_star) {
      t.p_cs = p_cs[next++];
      t.feasible = *t.p_cs >= q.s_star;
    }
    if (t.feasible && !first) first = i;
    res.trace.push_back(t);
  }
  if (!first) return res;

  res.feasible = true;
  res.rho_dagger = grid[*first];
  res.p_cp = p_cp[*first];
  res.p_cs = *res.trace[*first].p_cs;
  if (*first == 0) return res;

  // The feasible set may start anywhere between the last infeasible grid
  // point and the first feasible one; resolve it on a geometric sub-grid.
  const double lo = grid[*first - 1];
  const double hi = grid[*first];
  const auto n = static_cast<int>(std::ceil(std::log(hi / lo) / std::log1p(opt.rel_width)));
  std::vector<double> sub;
  for (int k = 1; k < n; ++k) sub.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / n));
  const std::vector<double> sub_cp = primary_curve(q.tau, sc, sub, opt.threads);
  std::vector<double> sub_cand;
  for (std::size_t k = 0; k < sub.size(); ++k)
    if (sub_cp[k] >= q.p_star) sub_cand.push_back(sub[k]);
  const std::vector<double> sub_cs = secondary_coverage_curve(q.tau, sc, sub_cand, opt);
  next = 0;
  bool found = false;
  for (std::size_t k = 0; k < sub.size(); ++k) {
    RhoTracePoint t{sub[k], sub_cp[k], std::nullopt, false};
    if (sub_cp[k] >= q.p_star) {
      t.p_cs = sub_cs[next++];
      t.feasible = *t.p_cs >= q.s_star;
    }
    if (t.feasible && !found) {
      found = true;
      res.rho_dagger = t.rho;
      res.p_cp = t.p_cp;
      res.p_cs = *t.p_cs;
    }
    res.trace.push_back(t);
  }
  return res;
}

std::optional<double> feasible_tau_ceiling(const QoSConstraint& q, const Scenario& sc,
                                           const TauGrid& grid, const PlannerOptions& opt) {
  QoSConstraint probe = q;
  probe.tau = 1.0;
  check(probe);
  sc.validate();
  const std::vector<double> taus = grid.points_db();
  auto ok = [&](double tau_db) {
    const double tau = db_to_linear(tau_db);
    if (coverage_primary_simplified(tau, sc) < q.p_star) return false;
    return secondary_coverage_curve(tau, sc, {sc.rho}, opt).front() >= q.s_star;
  };
  // Both coverages are nonincreasing in tau, so the feasible set is a prefix.
  if (!ok(taus.front())) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = taus.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (ok(taus[mid]))
      lo = mid;
    else
      hi = mid;
  }
  return db_to_linear(taus[lo]);
}

TradeoffCurve rho_tradeoff(double tau, const Scenario& sc, const PlannerOptions& opt,
                           double tolerance) {
  sc.validate();
  const std::vector<double> grid = opt.grid.points();
  const std::vector<double> p_cp = primary_curve(tau, sc, grid, opt.threads);
  const std::vector<double> p_cs = secondary_coverage_curve(tau, sc, grid, opt);
  TradeoffCurve c;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    c.points.push_back({grid[i], p_cp[i], p_cs[i]});
    if (i == 0) continue;
    if (p_cp[i] > p_cp[i - 1] + tolerance) c.p_cp_violations.push_back(i);
    if (p_cs[i] < p_cs[i - 1] - tolerance) c.p_cs_violations.push_back(i);
  }
  return c;
}

}  // namespace cognet
