#include <doctest.h>

#include <cmath>

#include "cognet/errors.hpp"
#include "cognet/rng.hpp"
#include "cognet/scenario.hpp"
#include "generators.hpp"

using namespace cognet;

TEST_CASE("default scenario values") {
  const Scenario sc = default_scenario();
  CHECK(sc.alpha == 3.3);
  CHECK(sc.region_radius == 4000.0);
  CHECK(sc.lambda_s == 8e-5);
  CHECK(sc.p_p == doctest::Approx(0.50119).epsilon(1e-5));
  CHECK(sc.p_p == doctest::Approx(std::pow(10.0, -0.3)).epsilon(1e-15));
  CHECK(sc.p_s == doctest::Approx(std::pow(10.0, -1.3)).epsilon(1e-15));
  CHECK(sc.r_p == 50.0);
  CHECK(sc.r_s == 20.0);
  CHECK(sc.sigma2 == 7.962e-7);
  CHECK(sc.rho == 40e-9);
  CHECK(sc.expected_secondaries() == doctest::Approx(4021.24).epsilon(1e-5));
  CHECK(sc.problems().empty());
}

TEST_CASE("noise derivation reproduces the default normalized noise") {
  const NoiseDerivation n;
  CHECK(n.noise_dbm() == doctest::Approx(-174.0 + 10.0 * std::log10(200e6)));
  CHECK(n.sigma2() == doctest::Approx(7.962e-7).epsilon(1e-3));
}

TEST_CASE("power and ratio conversions") {
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3).epsilon(1e-15));
  CHECK(dbm_to_watts(27.0) == doctest::Approx(0.50119).epsilon(1e-5));
  testgen::Gen g(41);
  for (int i = 0; i < 1000; ++i) {
    const double w = g.log_uniform(1e-15, 1e3);
    REQUIRE(std::abs(dbm_to_watts(watts_to_dbm(w)) / w - 1.0) < 1e-12);
    const double l = g.log_uniform(1e-6, 1e6);
    REQUIRE(std::abs(db_to_linear(linear_to_db(l)) / l - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(watts_to_dbm(0.0), DomainError);
  CHECK_THROWS_AS(linear_to_db(-1.0), DomainError);
}

TEST_CASE("validation lists every problem") {
  Scenario sc = default_scenario();
  sc.alpha = 2.0;
  sc.r_s = 0.0;
  sc.lambda_s = -1.0;
  const auto p = sc.problems();
  CHECK(p.size() == 3);
  try {
    sc.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.problems().size() == 3);
  }
  sc = default_scenario();
  sc.alpha = 2.0000001;
  CHECK(sc.problems().empty());
}

TEST_CASE("placement presets") {
  const PlacementPose t1 = preset_type(1).pose();
  CHECK(t1.x_p == 50.0);
  CHECK(t1.delta_p.radians() == doctest::Approx(kPi / 2));
  CHECK(t1.omega_p.radians() == doctest::Approx(kPi / 12));
  const PlacementPose t2 = preset_type(2).pose();
  CHECK(t2.x_p == 80.0);
  CHECK(t2.omega_p.radians() == doctest::Approx(-kPi / 2));
  const PlacementPose t3 = preset_type(3).pose();
  CHECK(t3.x_p == 10.0);
  CHECK(t3.omega_p.radians() == doctest::Approx(kPi / 2));
  CHECK(preset_type(4).is_random());
  CHECK_THROWS_AS(preset_type(0), DomainError);
  CHECK_THROWS_AS(preset_type(5), DomainError);
}

TEST_CASE("uniform-disk placement law has mean x_p^2 = R^2/2") {
  const double r = 4000.0;
  const PrimaryPlacement p = preset_type(4, r);
  RngStream rng(7, 0);
  const int n = 100000;
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double u3 = rng.uniform();
    const double x = p.pose_from_uniforms(u1, u2, u3).x_p;
    acc += x * x;
  }
  CHECK(std::abs(acc / n / (r * r / 2.0) - 1.0) < 0.02);
}

TEST_CASE("ULA pattern assignment") {
  Scenario sc = default_scenario();
  set_ula_patterns(sc, 4, 1);
  CHECK(sc.patterns.pt.main_gain() == 4.0);
  CHECK(sc.patterns.pr.main_gain() == 4.0);
  CHECK(sc.patterns.st.kind() == PatternKind::omni);
  CHECK(sc.patterns.sr.kind() == PatternKind::omni);
  CHECK_THROWS_AS(set_ula_patterns(sc, 0, 2), DomainError);
}
