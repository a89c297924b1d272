#include "cognet/coverage_secondary.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cognet/access.hpp"
#include "cognet/errors.hpp"
#include "cognet/parallel.hpp"
#include "cognet/rng.hpp"

namespace cognet {

namespace {

Vec2 unit(double a) { return {std::cos(a), std::sin(a)}; }

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

// Midpoints and normalized lengths of the arcs cut by up to 8 breakpoints.
struct SmallArcs {
  std::array<double, 9> mid{};
  std::array<double, 9> weight{};
  int n = 0;
};

SmallArcs small_arcs(std::array<double, 8> cuts, int count) {
  SmallArcs a;
  if (count == 0) {
    a.mid[0] = 0.0;
    a.weight[0] = 1.0;
    a.n = 1;
    return a;
  }
  for (int i = 0; i < count; ++i) cuts[i] = normalize_angle(cuts[i]);
  std::sort(cuts.begin(), cuts.begin() + count);
  for (int i = 0; i < count; ++i) {
    const double lo = cuts[i];
    const double hi = i + 1 < count ? cuts[i + 1] : cuts[0] + kTwoPi;
    if (hi - lo <= 0.0) continue;
    a.mid[a.n] = 0.5 * (lo + hi);
    a.weight[a.n] = (hi - lo) / kTwoPi;
    ++a.n;
  }
  return a;
}

double numerator(double rho, double e) {
  if (rho <= 0.0 || e == 0.0) return 0.0;
  if (std::isinf(e)) return 1.0;
  return -std::expm1(-rho * e);
}

struct TwoLevel {
  double q, a, b, width;
};

TwoLevel two_level(const BeamPattern& p) {
  switch (p.kind()) {
    case PatternKind::omni:
      return {1.0, 1.0, 1.0, kTwoPi};
    case PatternKind::sectorized:
    case PatternKind::ideal:
      return {p.beamwidth() / kTwoPi, p.main_gain(), p.side_gain(), p.beamwidth()};
    case PatternKind::tabulated:
      break;
  }
  throw DomainError("sectorized kernel needs omni, sectorized or ideal patterns");
}

// Overlap length of two arcs of equal width whose centers are d apart.
double arc_overlap(double width, double d) {
  d = std::abs(normalize_angle(d));
  return std::max(0.0, width - d) + std::max(0.0, width - (kTwoPi - d));
}

template <class Integrand>
double integrate_plane(const InterfererField& field, const Term4Spec& spec, Integrand&& f) {
  auto outer = [&](double th) {
    return integrate_semi_infinite([&](double x) { return x * f(x, th); }, 0.0,
                                   field.radial_scale(), spec.inner, field.radial_breaks(th));
  };
  std::vector<double> breaks;
  for (double b : field.angular_breaks()) breaks.push_back(normalize_angle(b));
  return integrate(outer, -kPi, kPi, spec.outer, breaks);
}

const PlacementPose& fixed_pose(const Scenario& sc) {
  if (sc.placement.is_random())
    throw DomainError("this evaluation needs a fixed primary placement");
  return sc.placement.pose();
}

}  // namespace

TypicalLinkQuantities typical_link_quantities(const Scenario& sc, const PlacementPose& pose) {
  const auto& p = sc.patterns;
  TypicalLinkQuantities q;
  q.a0 = sc.p_s * p.sr.gain(Angle(0.0)) * p.st.gain(Angle(0.0)) * std::pow(sc.r_s, -sc.alpha);
  const CrossLink c = cross_link(typical_link(sc), pose, sc);
  q.z_s0 = c.z;
  q.beta_s0 = c.beta;
  const double received = sc.p_s * c.gain_st * c.gain_pr;
  if (c.z == 0.0)
    q.a1 = received > 0.0 ? INFINITY : 0.0;
  else
    q.a1 = received * std::pow(c.z, -sc.alpha);
  q.a1 = sc.rho > 0.0 ? q.a1 / sc.rho : (q.a1 > 0.0 ? INFINITY : 0.0);
  const double d = pose.delta_p.radians();
  const double g = sc.p_p * p.pt.gain(Angle(d - kPi - pose.omega_p.radians())) * p.sr.gain(Angle(d));
  if (pose.x_p == 0.0)
    q.a2 = g > 0.0 ? INFINITY : 0.0;
  else
    q.a2 = g * std::pow(pose.x_p, -sc.alpha);
  return q;
}

InterfererField::InterfererField(double tau, const Scenario& sc, const PlacementPose& pose)
    : sc_(&sc), pose_(pose), tau_(tau) {
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  a0_ = sc.p_s * sc.patterns.sr.gain(Angle(0.0)) * sc.patterns.st.gain(Angle(0.0)) *
        std::pow(sc.r_s, -sc.alpha);
  yp_ = primary_tx_position(pose) + PolarPoint(sc.r_p, pose.omega_p).cartesian();
  radial_scale_ = std::max(sc.r_s * std::pow(tau, 1.0 / sc.alpha), 1e-6);
}

InterfererField::Point InterfererField::at(double x, double theta, double omega) const {
  const auto& p = sc_->patterns;
  Point pt;
  const Vec2 d = unit(theta) * x - yp_;
  pt.z = d.norm();
  const double beta = pt.z > 0.0 ? d.bearing() : 0.0;
  const double g_cross = p.st.gain(Angle(beta + kPi - omega)) *
                         p.pr.gain(Angle(beta - pose_.omega_p.radians() - kPi));
  if (sc_->rho <= 0.0)
    pt.a_s = 0.0;
  else
    pt.a_s = g_cross > 0.0 && sc_->p_s > 0.0 ? sc_->rho / (sc_->p_s * g_cross) : INFINITY;
  const double g_typ = p.st.gain(Angle(theta + kPi - omega)) * p.sr.gain(Angle(theta));
  pt.c_s = g_typ > 0.0 && sc_->p_s > 0.0 ? a0_ / (tau_ * sc_->p_s * g_typ) : INFINITY;
  return pt;
}

double InterfererField::kernel(const Point& p, double x) const {
  if (std::isinf(p.c_s)) return 0.0;
  double num;
  if (p.z == 0.0 || p.a_s == 0.0)
    num = 0.0;
  else if (std::isinf(p.a_s))
    num = 1.0;
  else
    num = -std::expm1(-p.a_s * std::pow(p.z, sc_->alpha));
  return num / (1.0 + p.c_s * std::pow(x, sc_->alpha));
}

void InterfererField::omega_terms(double x, double theta, std::vector<OmegaTerm>& out) const {
  out.clear();
  const auto& p = sc_->patterns;
  const double g_sr = p.sr.gain(Angle(theta));
  if (g_sr <= 0.0 || sc_->p_s <= 0.0) return;
  const Vec2 d = unit(theta) * x - yp_;
  const double z = d.norm();
  if (z == 0.0) return;
  const double beta = d.bearing();
  const double g_pr = p.pr.gain(Angle(beta - pose_.omega_p.radians() - kPi));
  const double z_a = std::pow(z, sc_->alpha);
  const double cx = a0_ * std::pow(x, sc_->alpha) / (tau_ * sc_->p_s * g_sr);
  auto add = [&](double w, double omega) {
    const double g_b = p.st.gain(Angle(theta + kPi - omega));
    if (g_b <= 0.0) return;
    const double g_a = p.st.gain(Angle(beta + kPi - omega)) * g_pr;
    const double e = g_a > 0.0 ? z_a / (sc_->p_s * g_a) : INFINITY;
    const double coef = w / (1.0 + cx / g_b);
    for (auto& t : out) {
      if (t.e == e) {
        t.coef += coef;
        return;
      }
    }
    out.push_back({coef, e});
  };
  if (p.st.piecewise_constant()) {
    std::array<double, 8> cuts{};
    int n = 0;
    for (double e : p.st.discontinuities()) {
      cuts[n++] = beta + kPi - e;
      cuts[n++] = theta + kPi - e;
    }
    const SmallArcs arcs = small_arcs(cuts, n);
    for (int i = 0; i < arcs.n; ++i) add(arcs.weight[i], arcs.mid[i]);
  } else {
    const CircleRule r = periodic_trapezoid(512);
    for (std::size_t i = 0; i < r.nodes.size(); ++i) add(r.weights[i], r.nodes[i]);
  }
}

double InterfererField::omega_average(double x, double theta) const {
  thread_local std::vector<OmegaTerm> terms;
  omega_terms(x, theta, terms);
  double acc = 0.0;
  for (const auto& t : terms) acc += t.coef * numerator(sc_->rho, t.e);
  return acc;
}

std::vector<double> InterfererField::angular_breaks() const {
  std::vector<double> out;
  for (double e : sc_->patterns.sr.discontinuities()) out.push_back(e);
  if (yp_.norm() > 0.0) out.push_back(yp_.bearing());
  for (double e : sc_->patterns.pr.discontinuities())
    out.push_back(pose_.omega_p.radians() + kPi + e);
  return out;
}

std::vector<double> InterfererField::radial_breaks(double theta) const {
  std::vector<double> out;
  const Vec2 u = unit(theta);
  const double t0 = yp_.x * u.x + yp_.y * u.y;
  if (t0 > 0.0) out.push_back(t0);
  for (double e : sc_->patterns.pr.discontinuities()) {
    const Vec2 v = unit(pose_.omega_p.radians() + kPi + e);
    const double den = cross(u, v);
    if (std::abs(den) < 1e-14) continue;
    const double t = cross(yp_, v) / den;
    const double s = cross(yp_, u) / den;
    if (t > 0.0 && s > 0.0) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SecondaryCoverageTerms coverage_secondary_terms(double tau, const Scenario& sc,
                                                const PlacementPose& pose) {
  sc.validate();
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  const TypicalLinkQuantities q = typical_link_quantities(sc, pose);
  SecondaryCoverageTerms t;
  t.lambda_s = sc.lambda_s;
  if (q.a0 <= 0.0) {
    t.term1 = 0.0;
    t.p_cs = 0.0;
    return t;
  }
  t.term1 = std::exp(-tau * sc.sigma2 / q.a0);
  t.term2 = map_from_gain_product(sc.rho, sc.p_s, q.z_s0, sc.alpha,
                                  cross_link(typical_link(sc), pose, sc).gain_st *
                                      cross_link(typical_link(sc), pose, sc).gain_pr);
  t.term3 = std::isinf(q.a2) ? 0.0 : 1.0 / (1.0 + tau * q.a2 / q.a0);
  t.term4 = sc.lambda_s > 0.0 ? term4_exact(tau, sc, pose) : 0.0;
  t.p_cs = t.term1 * t.term2 * t.term3 * std::exp(-t.lambda_s * t.term4);
  return t;
}

SecondaryCoverageTerms coverage_secondary_terms(double tau, const Scenario& sc) {
  return coverage_secondary_terms(tau, sc, fixed_pose(sc));
}

double coverage_secondary(double tau, const Scenario& sc) {
  return coverage_secondary_terms(tau, sc).p_cs;
}

double term4_exact(double tau, const Scenario& sc, const PlacementPose& pose,
                   const Term4Spec& spec) {
  sc.validate();
  if (sc.rho <= 0.0) return 0.0;
  const InterfererField field(tau, sc, pose);
  return integrate_plane(field, spec, [&](double x, double th) { return field.omega_average(x, th); });
}

double term4_exact(double tau, const Scenario& sc) { return term4_exact(tau, sc, fixed_pose(sc)); }

double term4_sectorized(double tau, const Scenario& sc, const PlacementPose& pose,
                        const Term4Spec& spec) {
  sc.validate();
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  if (sc.rho <= 0.0) return 0.0;
  const TwoLevel st = two_level(sc.patterns.st);
  const TwoLevel sr = two_level(sc.patterns.sr);
  const TwoLevel pr = two_level(sc.patterns.pr);
  const InterfererField field(tau, sc, pose);
  const Vec2 yp = field.primary_rx();
  const double wp = pose.omega_p.radians();
  const double main_product = st.a * sr.a;
  const std::array<double, 4> a_gain{st.a, st.a, st.b, st.b};
  const std::array<double, 4> b_gain{st.a, st.b, st.a, st.b};
  auto f = [&](double x, double th) {
    const Vec2 d = unit(th) * x - yp;
    const double z = d.norm();
    if (z == 0.0) return 0.0;
    const double beta = d.bearing();
    const bool e1 = std::abs(normalize_angle(th)) <= 0.5 * sr.width;
    const bool e2 = std::abs(normalize_angle(beta - wp - kPi)) <= 0.5 * pr.width;
    const double c_k = e2 ? pr.a : pr.b;
    const double d_k = e1 ? sr.a : sr.b;
    const double ov = arc_overlap(st.width, beta - th);
    const std::array<double, 4> q{ov / kTwoPi, (st.width - ov) / kTwoPi, (st.width - ov) / kTwoPi,
                                  1.0 - (2.0 * st.width - ov) / kTwoPi};
    const double z_a = std::pow(z, sc.alpha);
    const double x_ratio = std::pow(x / sc.r_s, sc.alpha) / tau;
    double acc = 0.0;
    for (int i = 0; i < 4; ++i) {
      if (q[i] <= 0.0) continue;
      const double bd = b_gain[i] * d_k;
      if (bd <= 0.0) continue;
      const double ac = a_gain[i] * c_k;
      const double num = ac > 0.0 ? -std::expm1(-sc.rho * z_a / (sc.p_s * ac)) : 1.0;
      acc += q[i] * num / (1.0 + x_ratio * main_product / bd);
    }
    return acc;
  };
  return integrate_plane(field, spec, f);
}

double term4_sectorized(double tau, const Scenario& sc) {
  return term4_sectorized(tau, sc, fixed_pose(sc));
}

double term4_near_primary(double tau, const Scenario& sc, const PlacementPose& pose,
                          NearPrimaryForm form) {
  sc.validate();
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  if (sc.rho <= 0.0) return 0.0;
  const auto& p = sc.patterns;
  const double s = sc.s();
  const double a0 = p.sr.gain(Angle(0.0)) * p.st.gain(Angle(0.0)) * sc.p_s *
                    std::pow(sc.r_s, -sc.alpha);
  const double wp = pose.omega_p.radians();
  const double st_moment = expected_gain_power(p.st, s);
  const double g1s = std::tgamma(1.0 - s);
  const CircleRule rule = pattern_rule({{&p.sr, 0.0}, {&p.pr, wp + kPi}});
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double th = rule.nodes[i];
    const double g_sr = p.sr.gain(Angle(th));
    if (g_sr <= 0.0) continue;
    const double g_pr = p.pr.gain(Angle(th - wp - kPi));
    double bracket = g1s;
    if (g_pr > 0.0) {
      const double k = sc.rho * tau * g_sr / (a0 * g_pr);
      if (form == NearPrimaryForm::upper_gamma)
        bracket = g1s - upper_incomplete_gamma_scaled(1.0 - s, k);
      else
        bracket = g1s - std::exp(-k) * upper_incomplete_gamma(1.0 - s, k);
    }
    const double c_moment = std::pow(tau * sc.p_s * g_sr / a0, s) * st_moment;
    acc += rule.weights[i] * bracket * c_moment;
  }
  return kTwoPi * std::tgamma(s) / sc.alpha * acc;
}

double term4_near_primary(double tau, const Scenario& sc, NearPrimaryForm form) {
  return term4_near_primary(tau, sc, fixed_pose(sc), form);
}

double term4_far_primary(double tau, const Scenario& sc, const PlacementPose& pose) {
  sc.validate();
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  if (sc.rho <= 0.0) return 0.0;
  const auto& p = sc.patterns;
  const double s = sc.s();
  const double a0 = p.sr.gain(Angle(0.0)) * p.st.gain(Angle(0.0)) * sc.p_s *
                    std::pow(sc.r_s, -sc.alpha);
  const Vec2 yp = primary_tx_position(pose) + PolarPoint(sc.r_p, pose.omega_p).cartesian();
  const double y = yp.norm();
  const double ang = y > 0.0 ? yp.bearing() : 0.0;
  const double y_a = std::pow(y, sc.alpha);
  const double g_pr = p.pr.gain(Angle(ang - pose.omega_p.radians()));
  std::vector<double> th_cuts = p.sr.discontinuities();
  const bool exact_arcs = p.sr.piecewise_constant() && p.st.piecewise_constant();
  if (p.st.piecewise_constant() && p.st.kind() != PatternKind::omni) {
    const double w = p.st.beamwidth();
    for (double off : {0.0, w, -w}) th_cuts.push_back(ang - kPi + off);
  }
  const CircleRule rule = exact_arcs ? arc_rule(th_cuts, 2) : periodic_trapezoid(512);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double th = rule.nodes[i];
    const double g_sr = p.sr.gain(Angle(th));
    if (g_sr <= 0.0) continue;
    std::vector<double> cuts;
    for (double e : p.st.discontinuities()) {
      cuts.push_back(ang - e);
      cuts.push_back(th + kPi - e);
    }
    const CircleRule om = p.st.piecewise_constant() ? arc_rule(cuts, 1) : periodic_trapezoid(512);
    double inner = 0.0;
    for (std::size_t j = 0; j < om.nodes.size(); ++j) {
      const double w = om.nodes[j];
      const double g_b = p.st.gain(Angle(th + kPi - w));
      if (g_b <= 0.0) continue;
      const double g_a = p.st.gain(Angle(ang - w)) * g_pr;
      const double num = g_a > 0.0 ? -std::expm1(-sc.rho * y_a / (sc.p_s * g_a)) : 1.0;
      inner += om.weights[j] * num * std::pow(tau * sc.p_s * g_b * g_sr / a0, s);
    }
    acc += rule.weights[i] * inner;
  }
  return kTwoPi * std::tgamma(s) * std::tgamma(1.0 - s) / sc.alpha * acc;
}

double term4_far_primary(double tau, const Scenario& sc) {
  return term4_far_primary(tau, sc, fixed_pose(sc));
}

double mean_contact_distance(double lambda_s) {
  if (!(lambda_s > 0.0)) throw DomainError("mean contact distance needs lambda_s > 0");
  return 0.5 / std::sqrt(lambda_s);
}

SecondaryCoverageProfile::SecondaryCoverageProfile(double tau, const Scenario& sc,
                                                   const PlacementPose& pose,
                                                   const ProfileResolution& res) {
  sc.validate();
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  const TypicalLinkQuantities q = typical_link_quantities(sc, pose);
  lambda_s_ = sc.lambda_s;
  if (q.a0 <= 0.0) {
    term1_ = 0.0;
    return;
  }
  term1_ = std::exp(-tau * sc.sigma2 / q.a0);
  term3_ = std::isinf(q.a2) ? 0.0 : 1.0 / (1.0 + tau * q.a2 / q.a0);
  const CrossLink c = cross_link(typical_link(sc), pose, sc);
  const double g = c.gain_st * c.gain_pr;
  if (c.z == 0.0)
    typical_e_ = 0.0;
  else
    typical_e_ = g > 0.0 && sc.p_s > 0.0 ? std::pow(c.z, sc.alpha) / (sc.p_s * g) : INFINITY;
  if (sc.lambda_s <= 0.0) return;

  const InterfererField field(tau, sc, pose);
  // Angular nodes: Gauss-Legendre on each arc between breaks, with the node
  // budget shared in proportion to arc length.
  std::vector<double> cuts = field.angular_breaks();
  for (double& b : cuts) b = normalize_angle(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<std::pair<double, double>> arcs;
  if (cuts.empty()) {
    arcs.emplace_back(-kPi, kPi);
  } else {
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) arcs.emplace_back(cuts[i], cuts[i + 1]);
    arcs.emplace_back(cuts.back(), cuts.front() + kTwoPi);
  }
  const double x_scale = field.radial_scale();
  const double lo = std::log(res.x_lo_factor * x_scale);
  const double hi = std::log(res.x_hi_factor * x_scale);
  const auto& glx = gauss_legendre(res.nodes_per_panel);
  std::vector<InterfererField::OmegaTerm> terms;
  for (const auto& [a, b] : arcs) {
    if (!(b > a)) continue;
    const int n = std::max(2, static_cast<int>(std::lround(res.theta_nodes * (b - a) / kTwoPi)));
    const auto& glt = gauss_legendre(n);
    for (int it = 0; it < n; ++it) {
      const double th = 0.5 * (a + b) + 0.5 * (b - a) * glt.nodes[it];
      const double w_th = 0.5 * (b - a) * glt.weights[it];
      std::vector<double> edges;
      for (double u = lo; u < hi; u += 1.0) edges.push_back(u);
      edges.push_back(hi);
      for (double t : field.radial_breaks(th)) {
        const double u = std::log(t);
        if (u > lo && u < hi) edges.push_back(u);
      }
      std::sort(edges.begin(), edges.end());
      for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double half = 0.5 * (edges[k + 1] - edges[k]);
        if (!(half > 1e-12)) continue;
        const double mid = 0.5 * (edges[k + 1] + edges[k]);
        for (std::size_t m = 0; m < glx.nodes.size(); ++m) {
          const double x = std::exp(mid + half * glx.nodes[m]);
          const double w = w_th * half * glx.weights[m] * x * x;
          field.omega_terms(x, th, terms);
          for (const auto& t : terms) {
            if (std::isinf(t.e))
              saturated_ += w * t.coef;
            else {
              coeff_.push_back(w * t.coef);
              expo_.push_back(t.e);
            }
          }
        }
      }
    }
  }
  std::vector<std::size_t> order(coeff_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return expo_[a] < expo_[b]; });
  std::vector<double> cs(order.size()), es(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    cs[i] = coeff_[order[i]];
    es[i] = expo_[order[i]];
  }
  coeff_ = std::move(cs);
  expo_ = std::move(es);
  prefix_ce_.assign(coeff_.size() + 1, 0.0);
  for (std::size_t i = 0; i < coeff_.size(); ++i) prefix_ce_[i + 1] = prefix_ce_[i] + coeff_[i] * expo_[i];
  suffix_c_.assign(coeff_.size() + 1, 0.0);
  for (std::size_t i = coeff_.size(); i-- > 0;) suffix_c_[i] = suffix_c_[i + 1] + coeff_[i];
}

SecondaryCoverageTerms SecondaryCoverageProfile::evaluate(double rho) const {
  SecondaryCoverageTerms t;
  t.lambda_s = lambda_s_;
  t.term1 = term1_;
  t.term3 = term3_;
  if (term1_ == 0.0) {
    t.p_cs = 0.0;
    return t;
  }
  t.term2 = numerator(rho, typical_e_);
  if (rho > 0.0 && lambda_s_ > 0.0) {
    // 1 - e^{-y} is y to within y/2 relative below kLinear and 1 to within
    // e^{-y} above kSaturated.
    constexpr double kLinear = 1e-10;
    constexpr double kSaturated = 40.0;
    const auto lo = static_cast<std::size_t>(
        std::lower_bound(expo_.begin(), expo_.end(), kLinear / rho) - expo_.begin());
    const auto hi = static_cast<std::size_t>(
        std::lower_bound(expo_.begin(), expo_.end(), kSaturated / rho) - expo_.begin());
    double acc = saturated_ + rho * prefix_ce_[lo] + suffix_c_[hi];
    for (std::size_t i = lo; i < hi; ++i) acc += coeff_[i] * -std::expm1(-rho * expo_[i]);
    t.term4 = acc;
  }
  t.p_cs = t.term1 * t.term2 * t.term3 * std::exp(-t.lambda_s * t.term4);
  return t;
}

AveragedSecondaryCoverage::AveragedSecondaryCoverage(double tau, const Scenario& sc,
                                                     std::int64_t n_placements, std::uint64_t seed,
                                                     int threads, const ProfileResolution& res)
    : tau_(tau), sc_(sc), threads_(threads), res_(res) {
  sc.validate();
  if (n_placements < 1) throw DomainError("need at least one placement");
  poses_.resize(static_cast<std::size_t>(n_placements));
  for (std::int64_t i = 0; i < n_placements; ++i) {
    if (!sc.placement.is_random()) {
      poses_[i] = sc.placement.pose();
      continue;
    }
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double u3 = rng.uniform();
    poses_[i] = sc.placement.pose_from_uniforms(u1, u2, u3);
  }
}

std::vector<EstimateWithCI> AveragedSecondaryCoverage::evaluate(std::span<const double> rhos) const {
  const std::size_t n = poses_.size();
  const std::size_t k = rhos.size();
  std::vector<double> values(n * k);
  parallel_for(static_cast<std::int64_t>(n), threads_, [&](std::int64_t i) {
    const SecondaryCoverageProfile prof(tau_, sc_, poses_[i], res_);
    for (std::size_t j = 0; j < k; ++j) values[j * n + i] = prof.evaluate(rhos[j]).p_cs;
  });
  std::vector<EstimateWithCI> out;
  out.reserve(k);
  for (std::size_t j = 0; j < k; ++j)
    out.push_back(estimate_from_samples(std::span<const double>(values.data() + j * n, n)));
  return out;
}

EstimateWithCI coverage_secondary_averaged(double tau, const Scenario& sc,
                                           std::int64_t n_placements, std::uint64_t seed,
                                           int threads) {
  const AveragedSecondaryCoverage avg(tau, sc, n_placements, seed, threads);
  const double rho = sc.rho;
  return avg.evaluate(std::span<const double>(&rho, 1)).front();
}

}  // namespace cognet
