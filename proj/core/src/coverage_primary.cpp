#include "cognet/coverage_primary.hpp"

#include <cmath>
#include <map>

#include "cognet/errors.hpp"

namespace cognet {

namespace {

double serving_gain(const Scenario& sc) {
  return sc.patterns.pt.gain(Angle(0.0)) * sc.patterns.pr.gain(Angle(0.0));
}

// 1 - e^{-v} - (1 - e^{-A-v}) v/(v + A), arranged to avoid cancellation.
double restricted_kernel(double v, double a) {
  if (v <= 0.0) return 0.0;
  return (-a * std::expm1(-v) + v * std::exp(-v) * std::expm1(-a)) / (v + a);
}

// Nodes over (theta, omega) for the pair g_pr(theta) g_st(theta - pi - omega).
template <class F>
void for_each_angle_pair(const DevicePatterns& p, F&& f) {
  const CircleRule th_rule = pattern_rule({{&p.pr, 0.0}});
  for (std::size_t i = 0; i < th_rule.nodes.size(); ++i) {
    const double th = th_rule.nodes[i];
    std::vector<double> cuts;
    if (p.st.piecewise_constant())
      for (double d : p.st.discontinuities()) cuts.push_back(th - kPi - d);
    const CircleRule om = p.st.piecewise_constant() ? arc_rule(cuts, 1) : periodic_trapezoid(512);
    const double g_pr = p.pr.gain(Angle(th));
    for (std::size_t j = 0; j < om.nodes.size(); ++j)
      f(th_rule.weights[i] * om.weights[j], g_pr * p.st.gain(Angle(th - kPi - om.nodes[j])));
  }
}

}  // namespace

double n3_general(const DevicePatterns& patterns, double alpha) {
  if (!(alpha > 2.0)) throw DomainError("n3 requires alpha > 2");
  const double s = 2.0 / alpha;
  double acc = 0.0;
  for_each_angle_pair(patterns, [&](double w, double d) {
    if (d > 0.0) acc += w * std::pow(d, s);
  });
  return kTwoPi * acc;
}

double n3_ula(int m_p, int m_s, double kappa_prime, double alpha) {
  if (m_p <= 1 || m_s <= 1) throw DomainError("n3_ula requires M_p, M_s > 1");
  if (!(alpha > 2.0)) throw DomainError("n3 requires alpha > 2");
  const double e = 2.0 / alpha - 1.0;
  const double k = kappa_prime;
  auto factor = [&](double m) { return 1.0 + (1.0 - k) / k * std::pow((1.0 - k) / (m - k), e); };
  return kTwoPi * k * k * std::pow(static_cast<double>(m_p) * m_s, e) * factor(m_p) * factor(m_s);
}

PrimaryKernelParams primary_kernel_params(const Scenario& sc) {
  PrimaryKernelParams k;
  k.alpha = sc.alpha;
  const double g0 = serving_gain(sc);
  if (!(g0 > 0.0) || !(sc.p_p > 0.0)) throw DomainError("primary link has no serving power");
  k.kappa_p = sc.rho * std::pow(sc.r_p, sc.alpha) / (sc.p_p * g0);
  k.n3 = n3_general(sc.patterns, sc.alpha);
  return k;
}

double primary_kernel_j(double alpha, double a) {
  const double s = 2.0 / alpha;
  if (a == 0.0) return 0.0;
  return std::pow(a, s) * n1(alpha) - std::tgamma(s) + n2(alpha, a);
}

double coverage_primary_noise_only(double tau, const Scenario& sc) {
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  const double g0 = serving_gain(sc);
  if (!(g0 > 0.0) || !(sc.p_p > 0.0)) return 0.0;
  return std::exp(-tau * sc.sigma2 * std::pow(sc.r_p, sc.alpha) / (sc.p_p * g0));
}

double laplace_secondary_interference(double s, const Scenario& sc, const QuadratureSpec& spec) {
  sc.validate();
  if (!(s >= 0.0)) throw DomainError("Laplace argument must be >= 0");
  if (s == 0.0 || sc.lambda_s == 0.0 || sc.rho == 0.0 || sc.p_s == 0.0) return 1.0;
  const double a = sc.rho * s;
  std::map<double, double> radial;  // keyed by gain product
  double acc = 0.0;
  for_each_angle_pair(sc.patterns, [&](double w, double d) {
    if (d <= 0.0) return;
    auto it = radial.find(d);
    if (it == radial.end()) {
      const double c = sc.rho / (sc.p_s * d);
      const double x1 = std::pow(c, -1.0 / sc.alpha);  // v = 1
      std::vector<double> breaks{x1};
      if (a < 1.0) breaks.push_back(std::pow(a / c, 1.0 / sc.alpha));
      const double r = integrate_radial(
          [&](double x) { return restricted_kernel(c * std::pow(x, sc.alpha), a); }, spec, x1,
          breaks);
      it = radial.emplace(d, r).first;
    }
    acc += w * it->second;
  });
  return std::exp(-sc.lambda_s * kTwoPi * acc);
}

double coverage_primary_exact(double tau, const Scenario& sc) {
  const double noise = coverage_primary_noise_only(tau, sc);
  if (noise == 0.0) return 0.0;
  const double s = tau * std::pow(sc.r_p, sc.alpha) / (sc.p_p * serving_gain(sc));
  return noise * laplace_secondary_interference(s, sc);
}

double coverage_primary_simplified(double tau, const Scenario& sc, KernelGrouping grouping) {
  sc.validate();
  const double noise = coverage_primary_noise_only(tau, sc);
  if (noise == 0.0) return 0.0;
  if (sc.lambda_s == 0.0 || sc.rho == 0.0 || sc.p_s == 0.0) return noise;
  const PrimaryKernelParams k = primary_kernel_params(sc);
  const double s = 2.0 / sc.alpha;
  const double a = k.kappa_p * tau;
  double j;
  if (grouping == KernelGrouping::separate) {
    j = primary_kernel_j(sc.alpha, a);
  } else {
    j = std::pow(a, s) * n1(sc.alpha) - std::tgamma(s + n2(sc.alpha, a));
  }
  const double expo = sc.lambda_s / sc.alpha * std::pow(sc.p_s / sc.rho, s) * j * k.n3;
  return noise * std::exp(-expo);
}

}  // namespace cognet
