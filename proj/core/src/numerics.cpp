#include "cognet/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>

#include "cognet/errors.hpp"
#include "cognet/geometry.hpp"

namespace cognet {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw DomainError("quadrature tolerances must be > 0");
  if (max_subdivisions < 1) throw DomainError("max_subdivisions must be >= 1");
}

namespace {

GaussLegendreRule build_gauss_legendre(int n) {
  GaussLegendreRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (x * p0 - p1) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

// Kronrod 15-point abscissae and weights, with the embedded 7-point Gauss
// weights (QUADPACK qk15 values).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const RealFunction& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{}, fv2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  const double ah = std::abs(half);
  double err = std::abs((resk - resg) * half);
  resasc *= ah;
  resabs *= ah;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(eps * 50.0 * resabs, err);
  return {a, b, resk * half, err};
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 1 || n > 256) throw DomainError("Gauss-Legendre order must be in [1, 256]");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendreRule>(build_gauss_legendre(n));
  return *slot;
}

QuadratureResult integrate_adaptive(const RealFunction& f, double a, double b,
                                    const QuadratureSpec& spec,
                                    const std::vector<double>& breaks) {
  spec.validate();
  QuadratureResult out;
  if (a == b) return out;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  std::vector<double> edges{a};
  for (double x : breaks)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel> heap;
  double frozen_value = 0.0, frozen_error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    heap.push(gk15(f, edges[i], edges[i + 1]));
    out.evaluations += 15;
  }
  auto totals = [&](double& v, double& e) {
    v = frozen_value;
    e = frozen_error;
    auto copy = heap;
    while (!copy.empty()) {
      v += copy.top().value;
      e += copy.top().error;
      copy.pop();
    }
  };
  double value = 0.0, error = 0.0;
  totals(value, error);
  while (true) {
    if (!std::isfinite(value) || !std::isfinite(error))
      throw NumericalError("non-finite integrand value", value, error);
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) break;
    if (heap.empty() || out.subdivisions >= spec.max_subdivisions) {
      throw NumericalError("adaptive quadrature did not reach tolerance", sign * value, error);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() *
                                  std::max(std::abs(worst.a), std::abs(worst.b))) {
      frozen_value += worst.value;
      frozen_error += worst.error;
      continue;
    }
    const Panel left = gk15(f, worst.a, mid);
    const Panel right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    ++out.subdivisions;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (out.subdivisions % 64 == 0) totals(value, error);
  }
  totals(value, error);
  out.value = sign * value;
  out.error = error;
  return out;
}

double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec,
                 const std::vector<double>& breaks) {
  return integrate_adaptive(f, a, b, spec, breaks).value;
}

double integrate_semi_infinite(const RealFunction& f, double a, double scale,
                               const QuadratureSpec& spec, const std::vector<double>& breaks) {
  if (!(scale > 0.0)) throw DomainError("semi-infinite scale must be > 0");
  auto g = [&](double t) {
    const double om = 1.0 - t;
    if (om <= 0.0) return 0.0;
    const double x = a + scale * t / om;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x) * scale / (om * om);
    return std::isfinite(v) ? v : 0.0;
  };
  std::vector<double> tb;
  for (double x : breaks)
    if (x > a) tb.push_back((x - a) / (scale + x - a));
  return integrate_adaptive(g, 0.0, 1.0, spec, tb).value;
}

double integrate_radial(const RealFunction& f, const QuadratureSpec& spec, double scale,
                        const std::vector<double>& breaks) {
  return integrate_semi_infinite([&](double x) { return x == 0.0 ? 0.0 : f(x) * x; }, 0.0, scale,
                                 spec, breaks);
}

double n1(double alpha) {
  if (!(alpha > 2.0)) throw DomainError("n1 requires alpha > 2");
  return kPi / std::sin(kTwoPi / alpha);
}

double n2(double alpha, double nu) {
  if (!(alpha > 2.0)) throw DomainError("n2 requires alpha > 2");
  if (!(nu >= 0.0)) throw DomainError("n2 requires nu >= 0");
  const double s = 2.0 / alpha;
  if (nu == 0.0) return std::tgamma(s);
  if (nu > 745.0) return 0.0;
  QuadratureSpec spec;
  spec.rel_tol = 1e-13;
  spec.abs_tol = 1e-300;
  spec.max_subdivisions = 4000;
  auto f = [&](double t) { return std::exp(-t) * std::pow(t, s) / (t + nu); };
  std::vector<double> breaks{1.0};
  if (nu < 1.0) breaks.push_back(nu);
  return std::exp(-nu) * integrate_semi_infinite(f, 0.0, 1.0, spec, breaks);
}

double n2_closed_form(double alpha, double nu) {
  if (!(alpha > 2.0)) throw DomainError("n2 requires alpha > 2");
  if (!(nu >= 0.0)) throw DomainError("n2 requires nu >= 0");
  const double s = 2.0 / alpha;
  if (nu == 0.0) return std::tgamma(s);
  return std::tgamma(1.0 + s) * std::pow(nu, s) * upper_incomplete_gamma(-s, nu);
}

double psi(double u, double alpha, double region_radius) {
  if (!(u > 0.0)) throw DomainError("psi requires u > 0");
  if (!(alpha > 2.0)) throw DomainError("psi requires alpha > 2");
  if (!(region_radius >= 0.0)) throw DomainError("psi requires R >= 0");
  const double s = 2.0 / alpha;
  const double b = std::isinf(region_radius) ? region_radius : u * std::pow(region_radius, alpha);
  return std::pow(u, -s) * lower_incomplete_gamma(s, b);
}

}  // namespace cognet
