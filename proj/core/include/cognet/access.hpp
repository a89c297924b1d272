#pragma once

#include "cognet/antenna.hpp"
#include "cognet/geometry.hpp"
#include "cognet/scenario.hpp"

namespace cognet {

// A secondary link seen from its transmitter. `orientation` is the
// transmitter's boresight, i.e. the direction from transmitter to receiver.
struct SecondaryLink {
  PolarPoint tx;
  Angle orientation;
  double length = 20.0;
};

// The typical link of the secondary frame: receiver at the origin,
// transmitter at r_s∠0 pointing back at the origin.
SecondaryLink typical_link(const Scenario& sc);

// 1 - exp(-rho d^alpha / (p_s D)) with the zero-gain and rho = 0 conventions.
double map_from_gain_product(double rho, double p_s, double distance, double alpha,
                             double gain_product);

// Gains and distance of a secondary transmitter relative to the primary
// receiver in the typical-secondary frame.
struct CrossLink {
  double z = 0.0;            // |X_si - Y_p|
  double beta = 0.0;         // bearing of X_si - Y_p
  double gain_st = 0.0;      // interferer transmit gain toward Y_p
  double gain_pr = 0.0;      // primary receive gain toward X_si
};

CrossLink cross_link(const SecondaryLink& link, const PlacementPose& pose, const Scenario& sc);

// Primary-receiver frame: Y_p at the origin, primary transmitter on the
// positive x-axis.
double map_primary_frame(const SecondaryLink& link, const Scenario& sc);
// Typical-secondary frame with the given primary pose.
double map_secondary_frame(const SecondaryLink& link, const PlacementPose& pose,
                           const Scenario& sc);
// Re-expresses a secondary-frame link in the primary-receiver frame.
SecondaryLink to_primary_frame(const SecondaryLink& link, const PlacementPose& pose, double r_p);

double protection_zone_radius(Angle theta, Angle omega, double fade, const Scenario& sc);
// Area of the main-lobe segment of the protection zone for omega = pi.
double protection_zone_area_mainlobe(const Scenario& sc, double fade);

// 1 - s b^{-s} gamma(s, b): the fraction of a disk of reduced radius
// b = c R^alpha where 1 - exp(-c x^alpha) is averaged. Stable for small b.
double disk_average_map(double b, double s);

// Angular-quadrature evaluation of the activity factor for arbitrary patterns.
double activity_factor(const Scenario& sc);
// Four-term mixture; requires omni, sectorized or ideal pr/st patterns.
double activity_factor_sectorized(const Scenario& sc);
// 1 - (2/(alpha R^2)) psi(rho / p_s).
double activity_factor_omni(const Scenario& sc);

struct AccessDiagnostics {
  double eta_bar_ideal = 0.0;
  double eta_bar_omni = 0.0;
  double psi_ideal = 0.0;
  double psi_omni = 0.0;
  double gamma_ideal = 0.0;
  double gamma_omni = 0.0;

  double eta_bar_ratio() const { return eta_bar_ideal / eta_bar_omni; }
  double psi_ratio() const { return psi_ideal / psi_omni; }
  double gamma_ratio() const { return gamma_ideal / gamma_omni; }
};

// Ideal-beam quantities are built from the main lobes of pr and st.
AccessDiagnostics tradeoff_diagnostics(const Scenario& sc);

}  // namespace cognet
