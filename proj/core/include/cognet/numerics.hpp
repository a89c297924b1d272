#pragma once

#include <functional>
#include <vector>

namespace cognet {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;

  // Throws DomainError on non-positive tolerances or subdivisions.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
};

using RealFunction = std::function<double(double)>;

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// Cached n-point Gauss-Legendre rule, n in [1, 256].
const GaussLegendreRule& gauss_legendre(int n);

// Globally adaptive Gauss-Kronrod (7/15) integration over [a, b]. Interior
// points listed in `breaks` start as panel edges. Throws NumericalError with
// the best estimate when the tolerance cannot be met.
QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const QuadratureSpec& spec = {},
                                    const std::vector<double>& breaks = {});

double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec = {},
                 const std::vector<double>& breaks = {});

// Integral of f over [a, inf) through x = a + c t/(1 - t). `scale` is c and
// should be the integrand's characteristic length. Breaks are in x.
double integrate_semi_infinite(const RealFunction& f, double a, double scale,
                               const QuadratureSpec& spec = {},
                               const std::vector<double>& breaks = {});

// Integral of f(x) x dx over [0, inf).
double integrate_radial(const RealFunction& f, const QuadratureSpec& spec = {},
                        double scale = 1.0, const std::vector<double>& breaks = {});

// gamma(a, b) = int_0^b t^{a-1} e^{-t} dt; a > 0, b >= 0 (b may be +inf).
double lower_incomplete_gamma(double a, double b);
// Gamma(a, b) = int_b^inf t^{a-1} e^{-t} dt; b >= 0, and b > 0 when a <= 0.
double upper_incomplete_gamma(double a, double b);
// e^b Gamma(a, b), finite for large b.
double upper_incomplete_gamma_scaled(double a, double b);
// E_1(x) for x > 0.
double exponential_integral_e1(double x);

// pi / sin(2 pi / alpha), alpha > 2.
double n1(double alpha);
// int_nu^inf e^{-u} (u - nu)^{2/alpha} / u du, by quadrature; nu >= 0.
double n2(double alpha, double nu);
// Independent closed form Gamma(1 + s) nu^s Gamma_upper(-s, nu), s = 2/alpha.
double n2_closed_form(double alpha, double nu);
// u^{-2/alpha} gamma(2/alpha, u R^alpha); R may be +inf.
double psi(double u, double alpha, double region_radius);

}  // namespace cognet
