#include "cognet/scenario.hpp"

#include <cmath>

#include "cognet/errors.hpp"

namespace cognet {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
  if (!(watts > 0.0)) throw DomainError("power must be > 0 to express in dBm");
  return 10.0 * std::log10(watts) + 30.0;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
  if (!(linear > 0.0)) throw DomainError("value must be > 0 to express in dB");
  return 10.0 * std::log10(linear);
}

double NoiseDerivation::noise_dbm() const {
  return thermal_floor_dbm_per_hz + 10.0 * std::log10(bandwidth_hz);
}

double NoiseDerivation::sigma2() const { return dbm_to_watts(noise_dbm()) / near_field_gain; }

std::vector<std::string> Scenario::problems() const {
  std::vector<std::string> out;
  auto need = [&](bool ok, const char* msg) {
    if (!ok) out.emplace_back(msg);
  };
  need(std::isfinite(alpha) && alpha > 2.0, "scenario.alpha must be > 2");
  need(std::isfinite(rho) && rho >= 0.0, "scenario.rho must be >= 0");
  need(std::isfinite(p_p) && p_p >= 0.0, "scenario.p_p must be >= 0");
  need(std::isfinite(p_s) && p_s >= 0.0, "scenario.p_s must be >= 0");
  need(std::isfinite(lambda_s) && lambda_s >= 0.0, "scenario.lambda_s must be >= 0");
  need(std::isfinite(r_p) && r_p > 0.0, "scenario.r_p must be > 0");
  need(std::isfinite(r_s) && r_s > 0.0, "scenario.r_s must be > 0");
  need(std::isfinite(sigma2) && sigma2 >= 0.0, "scenario.sigma2 must be >= 0");
  need(std::isfinite(region_radius) && region_radius > 0.0, "scenario.R must be > 0");
  return out;
}

void Scenario::validate() const {
  auto p = problems();
  if (!p.empty()) throw ConfigError(std::move(p));
}

double Scenario::expected_secondaries() const noexcept {
  return lambda_s * kPi * region_radius * region_radius;
}

Scenario default_scenario() {
  Scenario sc;
  sc.p_p = dbm_to_watts(27.0);
  sc.p_s = dbm_to_watts(17.0);
  return sc;
}

PrimaryPlacement preset_type(int n, double region_radius, RadialLaw law) {
  switch (n) {
    case 1:
      return PrimaryPlacement::fixed({50.0, Angle(kPi / 2), Angle(kPi / 12)});
    case 2:
      return PrimaryPlacement::fixed({80.0, Angle(kPi / 2), Angle(-kPi / 2)});
    case 3:
      return PrimaryPlacement::fixed({10.0, Angle(kPi / 2), Angle(kPi / 2)});
    case 4:
      return PrimaryPlacement::random(region_radius, law);
    default:
      throw DomainError("placement preset must be 1..4");
  }
}

void set_ula_patterns(Scenario& sc, int m_primary, int m_secondary, double kappa) {
  if (m_primary < 1 || m_secondary < 1) throw DomainError("element count must be >= 1");
  sc.patterns.pt = ula_or_omni(m_primary, kappa);
  sc.patterns.pr = ula_or_omni(m_primary, kappa);
  sc.patterns.st = ula_or_omni(m_secondary, kappa);
  sc.patterns.sr = ula_or_omni(m_secondary, kappa);
}

}  // namespace cognet
