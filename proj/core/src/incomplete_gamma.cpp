#include <cmath>
#include <limits>

#include "cognet/errors.hpp"
#include "cognet/numerics.hpp"

namespace cognet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 10000;

// x^a e^{-x} computed in log space.
double prefactor(double a, double x) { return std::exp(a * std::log(x) - x); }

// gamma(a, x) by its power series; a > 0.
double lower_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) return sum * prefactor(a, x);
  }
  throw NumericalError("incomplete gamma series did not converge", sum * prefactor(a, x),
                       std::abs(term));
}

// e^x x^{-a} Gamma(a, x) by Lentz's continued fraction; x > 0, not small.
double upper_fraction_bare(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw NumericalError("incomplete gamma continued fraction did not converge", h, 0.0);
}

double upper_fraction(double a, double x) { return upper_fraction_bare(a, x) * prefactor(a, x); }

}  // namespace

double exponential_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("E1 requires x > 0");
  if (x <= 1.0) {
    constexpr double euler = 0.57721566490153286060651209008240243;
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k < kMaxIter; ++k) {
      term *= -x / k;
      const double add = term / k;
      sum += add;
      if (std::abs(add) < kEps * std::abs(sum)) break;
    }
    return -euler - std::log(x) - sum;
  }
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h * std::exp(-x);
  }
  throw NumericalError("E1 continued fraction did not converge", h * std::exp(-x), 0.0);
}

double lower_incomplete_gamma(double a, double b) {
  if (!(a > 0.0)) throw DomainError("lower incomplete gamma requires a > 0");
  if (!(b >= 0.0)) throw DomainError("lower incomplete gamma requires b >= 0");
  if (b == 0.0) return 0.0;
  if (std::isinf(b)) return std::tgamma(a);
  if (b < a + 1.0) return lower_series(a, b);
  return std::tgamma(a) - upper_fraction(a, b);
}

double upper_incomplete_gamma(double a, double b) {
  if (!(b >= 0.0)) throw DomainError("upper incomplete gamma requires b >= 0");
  if (std::isinf(b)) return 0.0;
  if (a > 0.0) {
    if (b == 0.0) return std::tgamma(a);
    if (b < a + 1.0) return std::tgamma(a) - lower_series(a, b);
    return upper_fraction(a, b);
  }
  if (b == 0.0) throw DomainError("upper incomplete gamma diverges for a <= 0 at b = 0");
  if (b >= 1.0) return upper_fraction(a, b);
  // Small b, a <= 0: step down from a positive order (or from E1 when a is
  // a non-positive integer) with Gamma(a, b) = (Gamma(a+1, b) - b^a e^{-b}) / a.
  const double k = std::ceil(-a);
  double g;
  double order;
  if (-a == k) {
    g = exponential_integral_e1(b);
    order = 0.0;
  } else {
    order = a + k;
    g = std::tgamma(order) - lower_series(order, b);
  }
  while (order - 1.0 >= a - 1e-12) {
    const double lo = order - 1.0;
    g = (g - prefactor(lo, b)) / lo;
    order = lo;
  }
  return g;
}

double upper_incomplete_gamma_scaled(double a, double b) {
  if (!(b >= 0.0)) throw DomainError("upper incomplete gamma requires b >= 0");
  if (std::isinf(b)) return 0.0;
  if (b >= 1.0 && b >= a + 1.0) return upper_fraction_bare(a, b) * std::pow(b, a);
  if (b >= 1.0 && a <= 0.0) return upper_fraction_bare(a, b) * std::pow(b, a);
  return std::exp(b) * upper_incomplete_gamma(a, b);
}

}  // namespace cognet
