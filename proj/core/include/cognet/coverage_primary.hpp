#pragma once

#include "cognet/antenna.hpp"
#include "cognet/numerics.hpp"
#include "cognet/scenario.hpp"

namespace cognet {

struct PrimaryKernelParams {
  double kappa_p = 0.0;  // rho r_p^alpha / (p_p g_pt(0) g_pr(0))
  double n3 = 0.0;       // average secondary directivity
  double alpha = 0.0;
};

PrimaryKernelParams primary_kernel_params(const Scenario& sc);

// 2 pi E[(g_pr(theta) g_st(theta - pi - omega))^{2/alpha}] over uniform
// theta, omega.
double n3_general(const DevicePatterns& patterns, double alpha);
// Product form for ULA patterns with M_p, M_s > 1.
double n3_ula(int m_p, int m_s, double kappa_prime, double alpha);

// A^{2/alpha} n1 - Gamma(2/alpha) + n2(alpha, A).
double primary_kernel_j(double alpha, double a);

// Laplace transform of the aggregate interference from active secondaries
// at the primary receiver. Radial integrals are done by quadrature.
double laplace_secondary_interference(double s, const Scenario& sc,
                                      const QuadratureSpec& spec = {1e-10, 1e-300, 4000});

// Noise factor times the Laplace transform, integrated numerically.
double coverage_primary_exact(double tau, const Scenario& sc);

enum class KernelGrouping {
  separate,  // ... - Gamma(2/alpha) + n2(...)
  printed,   // ... - Gamma(2/alpha + n2(...)), kept for comparison only
};

// Kernel form with n1, n2, n3 and kappa_p.
double coverage_primary_simplified(double tau, const Scenario& sc,
                                   KernelGrouping grouping = KernelGrouping::separate);

// Noise-only coverage exp(-tau sigma^2 r_p^alpha / (p_p g_pt(0) g_pr(0))).
double coverage_primary_noise_only(double tau, const Scenario& sc);

}  // namespace cognet
