#pragma once

#include <string>
#include <vector>

#include "cognet/antenna.hpp"
#include "cognet/geometry.hpp"

namespace cognet {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double linear);

// sigma^2 = N0 / C_L with N0 = -174 dBm/Hz + 10 log10(BW).
struct NoiseDerivation {
  double bandwidth_hz = 200e6;
  double near_field_gain = 1e-6;
  double thermal_floor_dbm_per_hz = -174.0;

  double noise_dbm() const;
  double sigma2() const;
};

struct Scenario {
  double alpha = 3.3;
  double rho = 40e-9;            // W
  double p_p = 0.0;              // W
  double p_s = 0.0;              // W
  double lambda_s = 8e-5;        // 1/m^2
  double r_p = 50.0;             // m
  double r_s = 20.0;             // m
  double sigma2 = 7.962e-7;      // normalized noise
  double region_radius = 4000.0; // m
  DevicePatterns patterns;
  PrimaryPlacement placement = PrimaryPlacement::fixed({50.0, Angle(kPi / 2), Angle(kPi / 12)});

  // Returns every violated invariant; empty when valid.
  std::vector<std::string> problems() const;
  // Throws ConfigError listing all problems.
  void validate() const;

  double s() const noexcept { return 2.0 / alpha; }
  double expected_secondaries() const noexcept;
};

// Carrier at 60 GHz: alpha 3.3, R 4000 m, lambda_s 8e-5, p_p 27 dBm,
// p_s 17 dBm, r_p 50 m, r_s 20 m, sigma^2 7.962e-7, rho 40 nW, omni
// patterns, Type-1 placement.
Scenario default_scenario();

// Types 1-3 are fixed poses; type 4 is random (uniform-disk law by default).
PrimaryPlacement preset_type(int n, double region_radius = 4000.0,
                             RadialLaw law = RadialLaw::uniform_disk);

// Replaces all four patterns with ULA(M_p) on the primary link and ULA(M_s)
// on the secondary links; M == 1 means omni.
void set_ula_patterns(Scenario& sc, int m_primary, int m_secondary,
                      double kappa = kDefaultKappaDeg * kPi / 180.0);

}  // namespace cognet
