#include "cognet/access.hpp"

#include <algorithm>
#include <cmath>

#include "cognet/errors.hpp"
#include "cognet/numerics.hpp"

namespace cognet {

SecondaryLink typical_link(const Scenario& sc) {
  return {PolarPoint(sc.r_s, Angle(0.0)), Angle(-kPi), sc.r_s};
}

double map_from_gain_product(double rho, double p_s, double distance, double alpha,
                             double gain_product) {
  if (rho <= 0.0) return 0.0;
  if (gain_product <= 0.0 || p_s <= 0.0) return 1.0;
  const double e = rho * std::pow(distance, alpha) / (p_s * gain_product);
  return -std::expm1(-e);
}

CrossLink cross_link(const SecondaryLink& link, const PlacementPose& pose, const Scenario& sc) {
  CrossLink c;
  const Vec2 yp = primary_tx_position(pose) + PolarPoint(sc.r_p, pose.omega_p).cartesian();
  const Vec2 d = link.tx.cartesian() - yp;
  c.z = d.norm();
  if (c.z == 0.0) {
    c.beta = 0.0;
    c.gain_st = sc.patterns.st.gain(Angle(0.0));
    c.gain_pr = sc.patterns.pr.gain(Angle(0.0));
    return c;
  }
  c.beta = d.bearing();
  // Direction from the interferer to Y_p is beta + pi; the primary receiver
  // looks back along omega_p + pi.
  c.gain_st = sc.patterns.st.gain(Angle(c.beta + kPi - link.orientation.radians()));
  c.gain_pr = sc.patterns.pr.gain(Angle(c.beta - pose.omega_p.radians() - kPi));
  return c;
}

double map_primary_frame(const SecondaryLink& link, const Scenario& sc) {
  const double th = link.tx.angle().radians();
  const double d = sc.patterns.pr.gain(Angle(th)) *
                   sc.patterns.st.gain(Angle(th - kPi - link.orientation.radians()));
  return map_from_gain_product(sc.rho, sc.p_s, link.tx.radius(), sc.alpha, d);
}

double map_secondary_frame(const SecondaryLink& link, const PlacementPose& pose,
                           const Scenario& sc) {
  const CrossLink c = cross_link(link, pose, sc);
  return map_from_gain_product(sc.rho, sc.p_s, c.z, sc.alpha, c.gain_st * c.gain_pr);
}

SecondaryLink to_primary_frame(const SecondaryLink& link, const PlacementPose& pose, double r_p) {
  const Vec2 yp = primary_tx_position(pose) + PolarPoint(r_p, pose.omega_p).cartesian();
  const Vec2 d = link.tx.cartesian() - yp;
  const double rot = pose.omega_p.radians() + kPi;
  const double z = d.norm();
  const double th = z > 0.0 ? d.bearing() - rot : 0.0;
  return {PolarPoint(z, Angle(th)), Angle(link.orientation.radians() - rot), link.length};
}

double protection_zone_radius(Angle theta, Angle omega, double fade, const Scenario& sc) {
  if (!(sc.rho > 0.0)) throw DomainError("protection zone needs rho > 0");
  const double g = sc.patterns.pr.gain(theta) *
                   sc.patterns.st.gain(Angle(theta.radians() - kPi - omega.radians()));
  if (g <= 0.0 || fade <= 0.0) return 0.0;
  return std::pow(sc.p_s * fade * g / sc.rho, 1.0 / sc.alpha);
}

double protection_zone_area_mainlobe(const Scenario& sc, double fade) {
  const auto& pr = sc.patterns.pr;
  const auto& st = sc.patterns.st;
  if (pr.kind() != PatternKind::sectorized && pr.kind() != PatternKind::ideal)
    throw DomainError("main-lobe protection zone needs a sectorized primary receiver");
  if (st.kind() == PatternKind::tabulated)
    throw DomainError("main-lobe protection zone needs a piecewise-constant st pattern");
  // With omega = pi the transmitter boresight points along theta, so both
  // main lobes are hit while |theta| is within both half-beamwidths.
  const double width = std::min(pr.beamwidth(), st.beamwidth());
  const double r = protection_zone_radius(Angle(0.0), Angle(kPi), fade, sc);
  return 0.5 * width * r * r;
}

double disk_average_map(double b, double s) {
  if (b <= 0.0) return 0.0;
  if (std::isinf(b)) return 1.0;
  if (b < 1.0) {
    double term = 1.0;
    double tail = 0.0;
    for (int n = 1; n < 200; ++n) {
      term *= b / (s + n);
      tail += term;
      if (term < 1e-17 * tail) break;
    }
    return -std::expm1(-b) - std::exp(-b) * tail;
  }
  return 1.0 - s * std::pow(b, -s) * lower_incomplete_gamma(s, b);
}

namespace {

double af_term(const Scenario& sc, double gain_product) {
  if (gain_product <= 0.0 || sc.p_s <= 0.0) return 1.0;
  const double b = sc.rho * std::pow(sc.region_radius, sc.alpha) / (sc.p_s * gain_product);
  return disk_average_map(b, sc.s());
}

}  // namespace

double activity_factor(const Scenario& sc) {
  sc.validate();
  if (sc.rho <= 0.0) return 0.0;
  const auto& pr = sc.patterns.pr;
  const auto& st = sc.patterns.st;
  const CircleRule th_rule = pattern_rule({{&pr, 0.0}});
  double acc = 0.0;
  for (std::size_t i = 0; i < th_rule.nodes.size(); ++i) {
    const double th = th_rule.nodes[i];
    const double g_pr = pr.gain(Angle(th));
    // g_st(theta - pi - omega) as a function of omega jumps where
    // theta - pi - omega hits a pattern edge.
    std::vector<double> cuts;
    if (st.piecewise_constant())
      for (double d : st.discontinuities()) cuts.push_back(th - kPi - d);
    const CircleRule om_rule = st.piecewise_constant() ? arc_rule(cuts, 1) : periodic_trapezoid(512);
    double inner = 0.0;
    for (std::size_t j = 0; j < om_rule.nodes.size(); ++j) {
      const double g_st = st.gain(Angle(th - kPi - om_rule.nodes[j]));
      inner += om_rule.weights[j] * af_term(sc, g_pr * g_st);
    }
    acc += th_rule.weights[i] * inner;
  }
  return std::clamp(acc, 0.0, 1.0);
}

namespace {

struct TwoLevel {
  double q, a, b;
};

TwoLevel two_level(const BeamPattern& p) {
  switch (p.kind()) {
    case PatternKind::omni:
      return {1.0, 1.0, 1.0};
    case PatternKind::sectorized:
    case PatternKind::ideal:
      return {p.beamwidth() / kTwoPi, p.main_gain(), p.side_gain()};
    case PatternKind::tabulated:
      break;
  }
  throw DomainError("closed-form mixture needs omni, sectorized or ideal patterns");
}

}  // namespace

double activity_factor_sectorized(const Scenario& sc) {
  sc.validate();
  if (sc.rho <= 0.0) return 0.0;
  const TwoLevel pr = two_level(sc.patterns.pr);
  const TwoLevel st = two_level(sc.patterns.st);
  return std::clamp(pr.q * st.q * af_term(sc, pr.a * st.a) +
                        pr.q * (1.0 - st.q) * af_term(sc, pr.a * st.b) +
                        (1.0 - pr.q) * st.q * af_term(sc, pr.b * st.a) +
                        (1.0 - pr.q) * (1.0 - st.q) * af_term(sc, pr.b * st.b),
                    0.0, 1.0);
}

double activity_factor_omni(const Scenario& sc) {
  sc.validate();
  if (sc.rho <= 0.0) return 0.0;
  const double r2 = sc.region_radius * sc.region_radius;
  return 1.0 - 2.0 / (sc.alpha * r2) * psi(sc.rho / sc.p_s, sc.alpha, sc.region_radius);
}

AccessDiagnostics tradeoff_diagnostics(const Scenario& sc) {
  sc.validate();
  if (!(sc.rho > 0.0) || !(sc.p_s > 0.0))
    throw DomainError("trade-off diagnostics need rho > 0 and p_s > 0");
  const BeamPattern pr = ideal_counterpart(sc.patterns.pr);
  const BeamPattern st = ideal_counterpart(sc.patterns.st);
  const double a = pr.main_gain() * st.main_gain();
  const double qq = main_lobe_probability(pr) * main_lobe_probability(st);
  const double s = sc.s();
  const double u_omni = sc.rho / sc.p_s;
  const double scale = 2.0 / (sc.alpha * sc.region_radius * sc.region_radius);
  AccessDiagnostics d;
  d.psi_ideal = psi(u_omni / a, sc.alpha, sc.region_radius);
  d.psi_omni = psi(u_omni, sc.alpha, sc.region_radius);
  d.eta_bar_ideal = scale * qq * d.psi_ideal;
  d.eta_bar_omni = scale * d.psi_omni;
  d.gamma_ideal = lower_incomplete_gamma(s, u_omni / a);
  d.gamma_omni = lower_incomplete_gamma(s, u_omni);
  return d;
}

}  // namespace cognet
