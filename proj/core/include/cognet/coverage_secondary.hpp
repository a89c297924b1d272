#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cognet/geometry.hpp"
#include "cognet/numerics.hpp"
#include "cognet/scenario.hpp"
#include "cognet/stats.hpp"

namespace cognet {

struct SecondaryCoverageTerms {
  double term1 = 1.0;  // noise factor
  double term2 = 1.0;  // MAP of the typical link
  double term3 = 1.0;  // primary-interference factor
  double term4 = 0.0;  // secondary-interference integral I
  double lambda_s = 0.0;
  double p_cs = 0.0;   // term1 term2 term3 exp(-lambda_s term4)
};

struct TypicalLinkQuantities {
  double a0 = 0.0;     // serving power p_s g_sr(0) g_st(0) r_s^-alpha
  double a1 = 0.0;     // typical-to-primary received power over rho (inf if rho = 0)
  double a2 = 0.0;     // primary-to-typical received power
  double z_s0 = 0.0;
  double beta_s0 = 0.0;
};

TypicalLinkQuantities typical_link_quantities(const Scenario& sc, const PlacementPose& pose);

// Interference field seen by the typical receiver for one primary pose and
// SINR threshold. Gains are evaluated with the scenario's patterns; the
// interferer boresight omega is uniform.
class InterfererField {
 public:
  InterfererField(double tau, const Scenario& sc, const PlacementPose& pose);

  struct Point {
    double z = 0.0;    // distance to the primary receiver
    double a_s = 0.0;  // rho / (p_s g_st g_pr); inf when either gain is 0
    double c_s = 0.0;  // A0 / (tau p_s g_st g_sr); inf when either gain is 0
  };

  Point at(double x, double theta, double omega) const;
  // (1 - e^{-A_s z^alpha}) / (1 + C_s x^alpha).
  double kernel(const Point& p, double x) const;
  // Kernel averaged over a uniform interferer boresight.
  double omega_average(double x, double theta) const;

  struct OmegaTerm {
    double coef;  // omega weight / (1 + C_s x^alpha)
    double e;     // z^alpha / (p_s g_st g_pr), so A_s z^alpha = rho e; inf for zero gain
  };
  // Terms of the omega average with nonzero weight and denominator; terms
  // sharing the same e are merged. Clears `out` first.
  void omega_terms(double x, double theta, std::vector<OmegaTerm>& out) const;

  // Directions of the primary receiver and of its lobe-edge rays, plus the
  // typical receiver lobe edges.
  std::vector<double> angular_breaks() const;
  // Distances along direction theta where the kernel changes regime.
  std::vector<double> radial_breaks(double theta) const;
  double radial_scale() const noexcept { return radial_scale_; }

  Vec2 primary_rx() const noexcept { return yp_; }
  double a0() const noexcept { return a0_; }

 private:
  const Scenario* sc_;
  PlacementPose pose_;
  double tau_;
  double a0_;
  Vec2 yp_;
  double radial_scale_;
};

SecondaryCoverageTerms coverage_secondary_terms(double tau, const Scenario& sc,
                                                const PlacementPose& pose);
// Requires a fixed placement.
double coverage_secondary(double tau, const Scenario& sc);
SecondaryCoverageTerms coverage_secondary_terms(double tau, const Scenario& sc);

struct Term4Spec {
  QuadratureSpec outer{1e-7, 1e-14, 2000};
  QuadratureSpec inner{1e-9, 1e-16, 2000};
};

double term4_exact(double tau, const Scenario& sc, const PlacementPose& pose,
                   const Term4Spec& spec = {});
double term4_exact(double tau, const Scenario& sc);

// Mixture over the four transmit-gain pairs with arc-overlap weights;
// patterns must be omni, sectorized or ideal.
double term4_sectorized(double tau, const Scenario& sc, const PlacementPose& pose,
                        const Term4Spec& spec = {});
double term4_sectorized(double tau, const Scenario& sc);

enum class NearPrimaryForm {
  upper_gamma,     // Gamma(1-s) - e^{+k} Gamma_upper(1-s, k)
  printed_sign,    // Gamma(1-s) - e^{-k} Gamma_upper(1-s, k)
};

// Approximation for a primary receiver close to the typical link.
double term4_near_primary(double tau, const Scenario& sc, const PlacementPose& pose,
                          NearPrimaryForm form = NearPrimaryForm::upper_gamma);
double term4_near_primary(double tau, const Scenario& sc,
                          NearPrimaryForm form = NearPrimaryForm::upper_gamma);
// Approximation for a primary receiver far from the typical link.
double term4_far_primary(double tau, const Scenario& sc, const PlacementPose& pose);
double term4_far_primary(double tau, const Scenario& sc);

// Mean contact distance 1 / (2 sqrt(lambda_s)).
double mean_contact_distance(double lambda_s);

struct ProfileResolution {
  int theta_nodes = 32;
  int nodes_per_panel = 4;
  double x_lo_factor = 1e-3;  // relative to r_s tau^{1/alpha}
  double x_hi_factor = 1e4;
};

// Secondary coverage for one pose and tau, tabulated on fixed nodes so it can
// be evaluated cheaply for many values of rho.
class SecondaryCoverageProfile {
 public:
  SecondaryCoverageProfile(double tau, const Scenario& sc, const PlacementPose& pose,
                           const ProfileResolution& res = {});

  SecondaryCoverageTerms evaluate(double rho) const;
  std::size_t term_count() const noexcept { return coeff_.size(); }

 private:
  double term1_ = 1.0;
  double term3_ = 1.0;
  double lambda_s_ = 0.0;
  double typical_e_ = 0.0;
  double saturated_ = 0.0;
  // Terms sorted by exponent, with prefix sums of coeff * expo and suffix
  // sums of coeff for the linear and saturated ends.
  std::vector<double> coeff_;
  std::vector<double> expo_;
  std::vector<double> prefix_ce_;
  std::vector<double> suffix_c_;
};

// Placement-averaged secondary coverage for a random placement law.
class AveragedSecondaryCoverage {
 public:
  AveragedSecondaryCoverage(double tau, const Scenario& sc, std::int64_t n_placements,
                            std::uint64_t seed, int threads = 1,
                            const ProfileResolution& res = {});

  std::vector<EstimateWithCI> evaluate(std::span<const double> rhos) const;
  const std::vector<PlacementPose>& poses() const noexcept { return poses_; }

 private:
  double tau_;
  Scenario sc_;
  std::vector<PlacementPose> poses_;
  int threads_;
  ProfileResolution res_;
};

EstimateWithCI coverage_secondary_averaged(double tau, const Scenario& sc,
                                           std::int64_t n_placements, std::uint64_t seed,
                                           int threads = 1);

}  // namespace cognet
