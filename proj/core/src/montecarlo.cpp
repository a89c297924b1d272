#include "cognet/montecarlo.hpp"

#include <cmath>

#include "cognet/errors.hpp"
#include "cognet/parallel.hpp"

namespace cognet {

namespace {

double path_gain(double d, double alpha) { return std::pow(d, -alpha); }

void check_count(std::int64_t n) {
  if (n < 1) throw DomainError("need at least one sample");
}

}  // namespace

NetworkRealization sample_realization(const Scenario& sc, RngStream& rng, Frame frame,
                                      const PlacementPose& pose) {
  sc.validate();
  const auto& p = sc.patterns;
  NetworkRealization net;
  net.frame = frame;
  net.pose = pose;

  Vec2 yp{};
  double pr_look = 0.0;
  if (frame == Frame::typical_rx) {
    yp = primary_tx_position(pose) + PolarPoint(sc.r_p, pose.omega_p).cartesian();
    pr_look = pose.omega_p.radians() + kPi;
  }

  const double r = sc.region_radius;
  const std::int64_t n = rng.poisson(sc.expected_secondaries());
  net.tx.reserve(n);
  net.orientation.reserve(n);
  net.fade_cross.reserve(n);
  net.fade_typical.reserve(n);
  net.active.reserve(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const double rad = r * std::sqrt(rng.uniform());
    const double ang = kTwoPi * rng.uniform();
    const double om = kTwoPi * rng.uniform();
    const double g = rng.exponential();
    const double g2 = rng.exponential();
    const Vec2 x{rad * std::cos(ang), rad * std::sin(ang)};
    const Vec2 d = x - yp;
    const double z = d.norm();
    bool on = false;
    if (sc.rho > 0.0) {
      if (z == 0.0) {
        on = false;
      } else {
        const double beta = d.bearing();
        const double gain = p.st.gain(Angle(beta + kPi - om)) * p.pr.gain(Angle(beta - pr_look));
        on = sc.p_s * gain * g * path_gain(z, sc.alpha) < sc.rho;
      }
    }
    net.tx.push_back(x);
    net.orientation.push_back(normalize_angle(om));
    net.fade_cross.push_back(g);
    net.fade_typical.push_back(g2);
    net.active.push_back(on ? 1 : 0);
  }
  net.fade_primary = rng.exponential();
  net.fade_serving = rng.exponential();
  net.fade_typical_cross = rng.exponential();
  net.fade_primary_cross = rng.exponential();

  if (frame == Frame::typical_rx && sc.rho > 0.0) {
    const CrossLink c = cross_link(typical_link(sc), pose, sc);
    net.typical_active =
        c.z > 0.0 &&
        sc.p_s * c.gain_st * c.gain_pr * net.fade_typical_cross * path_gain(c.z, sc.alpha) < sc.rho;
  }
  return net;
}

EstimateWithCI estimate_map(const SecondaryLink& link, const PlacementPose& pose,
                            const Scenario& sc, std::int64_t n, RngStream& rng) {
  check_count(n);
  const CrossLink c = cross_link(link, pose, sc);
  const double received = c.z > 0.0 ? sc.p_s * c.gain_st * c.gain_pr * path_gain(c.z, sc.alpha)
                                    : (c.gain_st * c.gain_pr > 0.0 ? INFINITY : 0.0);
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < n; ++i)
    if (received * rng.exponential() < sc.rho) ++hits;
  return estimate_proportion(hits, n);
}

EstimateWithCI estimate_af(const Scenario& sc, std::int64_t n_realizations, std::uint64_t seed,
                           int threads) {
  check_count(n_realizations);
  if (!(sc.lambda_s > 0.0)) throw DomainError("undefined ratio: lambda_s is 0");
  const double expected = sc.expected_secondaries();
  std::vector<double> ratio(n_realizations);
  parallel_for(n_realizations, threads, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const NetworkRealization net = sample_realization(sc, rng, Frame::primary_rx);
    std::int64_t on = 0;
    for (auto a : net.active) on += a;
    ratio[i] = static_cast<double>(on) / expected;
  });
  return estimate_from_samples(ratio);
}

EstimateWithCI estimate_coverage_primary(double tau, const Scenario& sc,
                                         std::int64_t n_realizations, std::uint64_t seed,
                                         int threads) {
  check_count(n_realizations);
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  const auto& p = sc.patterns;
  const double serving = sc.p_p * p.pt.gain(Angle(0.0)) * p.pr.gain(Angle(0.0)) *
                         path_gain(sc.r_p, sc.alpha);
  std::vector<std::uint8_t> ok(n_realizations);
  parallel_for(n_realizations, threads, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    const NetworkRealization net = sample_realization(sc, rng, Frame::primary_rx);
    double interference = 0.0;
    for (std::size_t k = 0; k < net.size(); ++k) {
      if (!net.active[k]) continue;
      const double z = net.tx[k].norm();
      if (z == 0.0) continue;
      const double beta = net.tx[k].bearing();
      const double gain =
          p.st.gain(Angle(beta + kPi - net.orientation[k])) * p.pr.gain(Angle(beta));
      interference += sc.p_s * gain * net.fade_cross[k] * path_gain(z, sc.alpha);
    }
    ok[i] = serving * net.fade_primary > tau * (sc.sigma2 + interference);
  });
  std::int64_t hits = 0;
  for (auto v : ok) hits += v;
  return estimate_proportion(hits, n_realizations);
}

EstimateWithCI estimate_coverage_secondary(double tau, const Scenario& sc,
                                           std::int64_t n_realizations, std::uint64_t seed,
                                           int threads) {
  check_count(n_realizations);
  if (!(tau > 0.0)) throw DomainError("tau must be > 0");
  const auto& p = sc.patterns;
  const double serving = sc.p_s * p.st.gain(Angle(0.0)) * p.sr.gain(Angle(0.0)) *
                         path_gain(sc.r_s, sc.alpha);
  std::vector<std::uint8_t> ok(n_realizations);
  parallel_for(n_realizations, threads, [&](std::int64_t i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    PlacementPose pose;
    if (sc.placement.is_random()) {
      const double u1 = rng.uniform();
      const double u2 = rng.uniform();
      const double u3 = rng.uniform();
      pose = sc.placement.pose_from_uniforms(u1, u2, u3);
    } else {
      pose = sc.placement.pose();
    }
    const NetworkRealization net = sample_realization(sc, rng, Frame::typical_rx, pose);
    if (!net.typical_active) {
      ok[i] = 0;
      return;
    }
    const double d = pose.delta_p.radians();
    const double g_p = p.pt.gain(Angle(d + kPi - pose.omega_p.radians())) * p.sr.gain(Angle(d));
    double interference = 0.0;
    if (g_p > 0.0)
      interference = pose.x_p > 0.0
                         ? sc.p_p * g_p * net.fade_primary_cross * path_gain(pose.x_p, sc.alpha)
                         : INFINITY;
    for (std::size_t k = 0; k < net.size(); ++k) {
      if (!net.active[k]) continue;
      const double x = net.tx[k].norm();
      if (x == 0.0) continue;
      const double th = net.tx[k].bearing();
      const double gain = p.st.gain(Angle(th + kPi - net.orientation[k])) * p.sr.gain(Angle(th));
      interference += sc.p_s * gain * net.fade_typical[k] * path_gain(x, sc.alpha);
    }
    ok[i] = serving * net.fade_serving > tau * (sc.sigma2 + interference);
  });
  std::int64_t hits = 0;
  for (auto v : ok) hits += v;
  return estimate_proportion(hits, n_realizations);
}

}  // namespace cognet
