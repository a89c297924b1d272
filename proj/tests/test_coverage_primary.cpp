#include <doctest.h>

#include <cmath>

#include "cognet/coverage_primary.hpp"
#include "cognet/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cognet;

namespace {

constexpr double kKappaPrime = 121.0 / 360.0;

Scenario ula_scenario(int m_p, int m_s) {
  Scenario sc = default_scenario();
  set_ula_patterns(sc, m_p, m_s);
  return sc;
}

double db(double x) { return std::pow(10.0, x / 10.0); }

}  // namespace

TEST_CASE("average secondary directivity closed forms") {
  const double s = 2.0 / 3.3;
  CHECK(n3_general(DevicePatterns{}, 3.3) == kTwoPi);
  DevicePatterns p;
  p.pr = BeamPattern::sectorized(1.0, 1.0, 1.0);
  p.st = BeamPattern::sectorized(1.0, 1.0, 2.0);
  CHECK(n3_general(p, 3.3) == kTwoPi);

  p.pr = BeamPattern::sectorized(5.0, 0.3, 0.9);
  p.st = BeamPattern::sectorized(3.0, 0.1, 2.2);
  const double q1 = 0.9 / kTwoPi;
  const double q2 = 2.2 / kTwoPi;
  const double sect = kTwoPi * (q1 * std::pow(5.0, s) + (1 - q1) * std::pow(0.3, s)) *
                      (q2 * std::pow(3.0, s) + (1 - q2) * std::pow(0.1, s));
  CHECK(n3_general(p, 3.3) == doctest::Approx(sect).epsilon(1e-12));

  p.pr = BeamPattern::ideal(5.0, 0.9);
  p.st = BeamPattern::ideal(3.0, 2.2);
  CHECK(n3_general(p, 3.3) == doctest::Approx(kTwoPi * q1 * q2 * std::pow(15.0, s)).epsilon(1e-12));
  CHECK_THROWS_AS(n3_general(p, 2.0), DomainError);
}

TEST_CASE("ULA product form matches the general directivity") {
  for (int mp = 2; mp <= 64; mp *= 2)
    for (int ms = 2; ms <= 64; ms *= 2)
      for (double alpha : {2.5, 3.3, 4.0}) {
        DevicePatterns p;
        p.pr = from_ula({mp});
        p.st = from_ula({ms});
        const double g = n3_general(p, alpha);
        REQUIRE(std::abs(n3_ula(mp, ms, kKappaPrime, alpha) / g - 1.0) < 1e-12);
        REQUIRE(n3_ula(mp, ms, kKappaPrime, alpha) == doctest::Approx(n3_ula(ms, mp, kKappaPrime, alpha)).epsilon(1e-15));
      }
  CHECK_THROWS_AS(n3_ula(1, 4, kKappaPrime, 3.3), DomainError);
}

TEST_CASE("ULA directivity decreases with the element count") {
  double prev = n3_ula(2, 2, kKappaPrime, 3.3);
  for (int m = 3; m <= 256; ++m) {
    const double v = n3_ula(m, m, kKappaPrime, 3.3);
    REQUIRE(v <= prev);
    prev = v;
  }
}

TEST_CASE("no secondaries leaves only the noise factor") {
  Scenario sc = ula_scenario(4, 4);
  sc.lambda_s = 0.0;
  const double expect = std::exp(-sc.sigma2 * std::pow(sc.r_p, sc.alpha) / (sc.p_p * 16.0));
  CHECK(coverage_primary_exact(1.0, sc) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(coverage_primary_simplified(1.0, sc) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(coverage_primary_noise_only(1.0, sc) == doctest::Approx(expect).epsilon(1e-15));
  sc.sigma2 = 0.0;
  CHECK(coverage_primary_exact(3.0, sc) == 1.0);
  CHECK(laplace_secondary_interference(5.0, sc) == 1.0);
}

TEST_CASE("Laplace transform against a nested quadrature of the fade integral") {
  for (int m : {1, 2, 4}) {
    Scenario sc = ula_scenario(m, 8 / m);
    for (double rho : {1e-10, 40e-9, 1e-6}) {
      sc.rho = rho;
      const double s_pt = std::pow(sc.r_p, sc.alpha) / (sc.p_p * std::pow(static_cast<double>(m), 2.0));
      for (double s : {0.1 * s_pt, s_pt, 10.0 * s_pt}) {
        CAPTURE(m);
        CAPTURE(rho);
        CAPTURE(s);
        const double ref = oracle::laplace(s, sc);
        CHECK(std::abs(laplace_secondary_interference(s, sc) / ref - 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("Laplace transform bounds") {
  Scenario sc = ula_scenario(4, 2);
  CHECK(laplace_secondary_interference(0.0, sc) == 1.0);
  double prev = 1.0;
  for (double s = 1e-2; s < 1e9; s *= 4.0) {
    const double l = laplace_secondary_interference(s, sc);
    REQUIRE(l > 0.0);
    REQUIRE(l <= prev);
    prev = l;
  }
  CHECK_THROWS_AS(laplace_secondary_interference(-1.0, sc), DomainError);
}

TEST_CASE("kernel form equals the double-integral form") {
  for (int m : {1, 2, 4}) {
    for (double rho : {1e-12, 1e-10, 40e-9, 1e-7, 1e-5}) {
      for (double tau_db : {-10.0, -5.0, 0.0, 5.0, 10.0}) {
        Scenario sc = ula_scenario(m, m);
        sc.rho = rho;
        const double e = coverage_primary_exact(db(tau_db), sc);
        const double k = coverage_primary_simplified(db(tau_db), sc);
        CAPTURE(m);
        CAPTURE(rho);
        CAPTURE(tau_db);
        REQUIRE(std::abs(k / e - 1.0) < 1e-3);
      }
    }
  }
}

TEST_CASE("the printed kernel grouping does not match the double integral") {
  Scenario sc = ula_scenario(4, 4);
  double worst = 0.0;
  for (double rho : {1e-12, 1e-9, 1e-6})
    for (double tau_db : {-5.0, 0.0, 5.0}) {
      sc.rho = rho;
      const double e = coverage_primary_exact(db(tau_db), sc);
      const double p = coverage_primary_simplified(db(tau_db), sc, KernelGrouping::printed);
      worst = std::max(worst, std::abs(p / e - 1.0));
    }
  CHECK(worst > 1e-2);
}

TEST_CASE("coverage is invariant under the joint 10 dB rescaling") {
  testgen::Gen g(31);
  for (int k = 0; k < 50; ++k) {
    Scenario sc = ula_scenario(1 << g.integer(0, 3), 1 << g.integer(0, 3));
    sc.rho = g.log_uniform(1e-12, 1e-5);
    const double tau = g.log_uniform(0.05, 20.0);
    Scenario up = sc;
    up.rho *= 10.0;
    up.sigma2 *= 10.0;
    up.p_s *= 10.0;
    up.p_p *= 100.0;
    const double a = coverage_primary_simplified(tau, sc);
    REQUIRE(std::abs(coverage_primary_simplified(10.0 * tau, up) - a) < 1e-9);
    const double b = coverage_primary_exact(tau, sc);
    REQUIRE(std::abs(coverage_primary_exact(10.0 * tau, up) - b) < 1e-9);
  }
}

TEST_CASE("coverage is monotone in tau, lambda_s and rho") {
  testgen::Gen g(32);
  for (int k = 0; k < 200; ++k) {
    Scenario sc = ula_scenario(1 << g.integer(0, 3), 1 << g.integer(0, 3));
    sc.rho = g.log_uniform(1e-12, 1e-5);
    const double tau = g.log_uniform(0.05, 20.0);
    const double p = coverage_primary_simplified(tau, sc);
    REQUIRE(p >= 0.0);
    REQUIRE(p <= 1.0);
    REQUIRE(coverage_primary_simplified(tau * g.uniform(1.0, 3.0), sc) <= p);
    Scenario dense = sc;
    dense.lambda_s *= g.uniform(1.0, 5.0);
    REQUIRE(coverage_primary_simplified(tau, dense) <= p);
    Scenario loud = sc;
    loud.rho *= g.uniform(1.0, 10.0);
    REQUIRE(coverage_primary_simplified(tau, loud) <= p * (1.0 + 1e-12));
  }
}

TEST_CASE("primary beamforming shifts the half-coverage threshold by about 12 dB") {
  const auto crossing = [](const Scenario& sc) {
    double lo = -40.0, hi = 40.0;
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (coverage_primary_simplified(db(mid), sc) > 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  for (int ms : {1, 4}) {
    const double shift = crossing(ula_scenario(4, ms)) - crossing(ula_scenario(1, ms));
    CAPTURE(ms);
    CHECK(std::abs(shift - 12.0) < 1.5);
  }
}

TEST_CASE("kernel parameters") {
  const Scenario sc = ula_scenario(4, 2);
  const PrimaryKernelParams k = primary_kernel_params(sc);
  CHECK(k.kappa_p == doctest::Approx(sc.rho * std::pow(50.0, 3.3) / (sc.p_p * 16.0)).epsilon(1e-14));
  CHECK(k.n3 == doctest::Approx(n3_ula(4, 2, kKappaPrime, 3.3)).epsilon(1e-12));
  CHECK(primary_kernel_j(3.3, 0.0) == 0.0);
  CHECK_THROWS_AS(coverage_primary_exact(0.0, sc), DomainError);
}
