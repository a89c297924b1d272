#include "cognet/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cognet/errors.hpp"
#include "cognet/numerics.hpp"

namespace cognet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_lobe(double main_gain, double beamwidth) {
  if (!(main_gain > 0.0) || !std::isfinite(main_gain))
    throw DomainError("main-lobe gain must be > 0");
  if (!(beamwidth > 0.0) || beamwidth > kTwoPi * (1.0 + 1e-12))
    throw DomainError("beamwidth must be in (0, 2pi]");
}

}  // namespace

BeamPattern BeamPattern::omni() { return BeamPattern(); }

BeamPattern BeamPattern::sectorized(double main_gain, double side_gain, double beamwidth) {
  check_lobe(main_gain, beamwidth);
  if (!(side_gain >= 0.0) || !std::isfinite(side_gain))
    throw DomainError("side-lobe gain must be >= 0");
  BeamPattern p;
  p.data_ = SectorizedPattern{main_gain, side_gain, std::min(beamwidth, kTwoPi)};
  return p;
}

BeamPattern BeamPattern::ideal(double main_gain, double beamwidth) {
  check_lobe(main_gain, beamwidth);
  BeamPattern p;
  p.data_ = IdealPattern{main_gain, std::min(beamwidth, kTwoPi)};
  return p;
}

BeamPattern BeamPattern::tabulated(std::vector<double> samples) {
  if (samples.empty()) throw DomainError("tabulated pattern needs samples");
  for (double g : samples)
    if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("tabulated gains must be >= 0");
  BeamPattern p;
  p.data_ = TabulatedPattern{std::move(samples)};
  return p;
}

BeamPattern BeamPattern::tabulated(const std::function<double(double)>& gain_of_angle, int n) {
  if (n < 1) throw DomainError("table size must be >= 1");
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) s[k] = gain_of_angle(-kPi + kTwoPi * k / n);
  return tabulated(std::move(s));
}

PatternKind BeamPattern::kind() const noexcept {
  return std::visit(overloaded{[](const OmniPattern&) { return PatternKind::omni; },
                               [](const SectorizedPattern&) { return PatternKind::sectorized; },
                               [](const IdealPattern&) { return PatternKind::ideal; },
                               [](const TabulatedPattern&) { return PatternKind::tabulated; }},
                    data_);
}

double BeamPattern::gain(Angle theta) const {
  const double t = theta.radians();
  return std::visit(
      overloaded{[](const OmniPattern&) { return 1.0; },
                 [t](const SectorizedPattern& s) {
                   return std::abs(t) <= 0.5 * s.beamwidth ? s.main_gain : s.side_gain;
                 },
                 [t](const IdealPattern& s) {
                   return std::abs(t) <= 0.5 * s.beamwidth ? s.main_gain : 0.0;
                 },
                 [t](const TabulatedPattern& s) {
                   const auto n = static_cast<long>(s.samples.size());
                   long k = std::lround((t + kPi) / kTwoPi * static_cast<double>(n));
                   k %= n;
                   if (k < 0) k += n;
                   return s.samples[static_cast<std::size_t>(k)];
                 }},
      data_);
}

std::vector<double> BeamPattern::discontinuities() const {
  auto edges = [](double bw) -> std::vector<double> {
    if (bw >= kTwoPi) return {};
    return {-0.5 * bw, 0.5 * bw};
  };
  return std::visit(overloaded{[](const OmniPattern&) { return std::vector<double>{}; },
                               [&](const SectorizedPattern& s) {
                                 if (s.main_gain == s.side_gain) return std::vector<double>{};
                                 return edges(s.beamwidth);
                               },
                               [&](const IdealPattern& s) { return edges(s.beamwidth); },
                               [](const TabulatedPattern&) { return std::vector<double>{}; }},
                    data_);
}

bool BeamPattern::piecewise_constant() const noexcept {
  return kind() != PatternKind::tabulated;
}

double BeamPattern::main_gain() const {
  return std::visit(overloaded{[](const OmniPattern&) { return 1.0; },
                               [](const SectorizedPattern& s) { return s.main_gain; },
                               [](const IdealPattern& s) { return s.main_gain; },
                               [](const TabulatedPattern&) -> double {
                                 throw DomainError("tabulated pattern has no main-lobe gain");
                               }},
                    data_);
}

double BeamPattern::side_gain() const {
  return std::visit(overloaded{[](const OmniPattern&) { return 1.0; },
                               [](const SectorizedPattern& s) { return s.side_gain; },
                               [](const IdealPattern&) { return 0.0; },
                               [](const TabulatedPattern&) -> double {
                                 throw DomainError("tabulated pattern has no side-lobe gain");
                               }},
                    data_);
}

double BeamPattern::beamwidth() const {
  return std::visit(overloaded{[](const OmniPattern&) { return kTwoPi; },
                               [](const SectorizedPattern& s) { return s.beamwidth; },
                               [](const IdealPattern& s) { return s.beamwidth; },
                               [](const TabulatedPattern&) -> double {
                                 throw DomainError("tabulated pattern has no beamwidth");
                               }},
                    data_);
}

double BeamPattern::normalization_residual() const {
  if (kind() == PatternKind::omni) return 0.0;
  if (kind() == PatternKind::tabulated) return expected_gain_power(*this, 1.0) - 1.0;
  const double q = beamwidth() / kTwoPi;
  return main_gain() * q + side_gain() * (1.0 - q) - 1.0;
}

std::string BeamPattern::describe() const {
  std::ostringstream os;
  os.precision(6);
  std::visit(overloaded{[&](const OmniPattern&) { os << "omni"; },
                        [&](const SectorizedPattern& s) {
                          os << "sectorized(a=" << s.main_gain << ", b=" << s.side_gain
                             << ", phi=" << s.beamwidth * 180.0 / kPi << "deg)";
                        },
                        [&](const IdealPattern& s) {
                          os << "ideal(a=" << s.main_gain
                             << ", phi=" << s.beamwidth * 180.0 / kPi << "deg)";
                        },
                        [&](const TabulatedPattern& s) {
                          os << "tabulated(" << s.samples.size() << " samples)";
                        }},
             data_);
  return os.str();
}

BeamPattern from_ula(const UlaSpec& ula) {
  if (ula.elements <= 1) throw DomainError("ULA needs M > 1");
  if (!(ula.kappa > 0.0) || ula.kappa >= kTwoPi) throw DomainError("kappa must be in (0, 2pi)");
  const double m = ula.elements;
  const double kp = ula.kappa_prime();
  return BeamPattern::sectorized(m, (1.0 - kp) / (1.0 - kp / m), ula.kappa / m);
}

BeamPattern ula_or_omni(int elements, double kappa) {
  if (elements == 1) return BeamPattern::omni();
  return from_ula(UlaSpec{elements, kappa});
}

double main_lobe_probability(const BeamPattern& p) {
  switch (p.kind()) {
    case PatternKind::sectorized:
    case PatternKind::ideal:
      return p.beamwidth() / kTwoPi;
    default:
      throw DomainError("main-lobe probability undefined for this pattern");
  }
}

double expected_gain_power(const BeamPattern& p, double exponent) {
  if (!(exponent > 0.0)) throw DomainError("exponent must be > 0");
  switch (p.kind()) {
    case PatternKind::omni:
      return 1.0;
    case PatternKind::sectorized:
    case PatternKind::ideal: {
      const double q = p.beamwidth() / kTwoPi;
      const double side = p.side_gain() > 0.0 ? std::pow(p.side_gain(), exponent) : 0.0;
      return q * std::pow(p.main_gain(), exponent) + (1.0 - q) * side;
    }
    case PatternKind::tabulated: {
      const auto& s = std::get<TabulatedPattern>(p.data()).samples;
      double acc = 0.0;
      for (double g : s) acc += g > 0.0 ? std::pow(g, exponent) : 0.0;
      return acc / static_cast<double>(s.size());
    }
  }
  return 0.0;
}

BeamPattern ideal_counterpart(const BeamPattern& p) {
  switch (p.kind()) {
    case PatternKind::omni:
      return BeamPattern::ideal(1.0, kTwoPi);
    case PatternKind::sectorized:
    case PatternKind::ideal:
      return BeamPattern::ideal(p.main_gain(), p.beamwidth());
    case PatternKind::tabulated:
      break;
  }
  throw DomainError("no ideal counterpart for a tabulated pattern");
}

CircleRule periodic_trapezoid(int n) {
  if (n < 1) throw DomainError("trapezoid needs n >= 1");
  CircleRule r;
  r.nodes.resize(n);
  r.weights.assign(n, 1.0 / n);
  for (int k = 0; k < n; ++k) r.nodes[k] = -kPi + kTwoPi * (k + 0.5) / n;
  return r;
}

CircleRule arc_rule(std::vector<double> breakpoints, int nodes_per_arc) {
  if (nodes_per_arc < 1) throw DomainError("arc rule needs >= 1 node per arc");
  for (double& b : breakpoints) b = normalize_angle(b);
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end(),
                                [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                    breakpoints.end());
  CircleRule r;
  const auto& gl = gauss_legendre(nodes_per_arc);
  auto add_arc = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo);
    if (!(half > 0.0)) return;
    const double mid = 0.5 * (hi + lo);
    for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
      r.nodes.push_back(normalize_angle(mid + half * gl.nodes[k]));
      r.weights.push_back(half * gl.weights[k] / kTwoPi);
    }
  };
  if (breakpoints.empty()) {
    add_arc(-kPi, kPi);
    return r;
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) add_arc(breakpoints[i], breakpoints[i + 1]);
  add_arc(breakpoints.back(), breakpoints.front() + kTwoPi);
  return r;
}

CircleRule pattern_rule(const std::vector<PatternTerm>& terms) {
  std::vector<double> cuts;
  for (const auto& t : terms) {
    if (!t.pattern->piecewise_constant()) return periodic_trapezoid(512);
    for (double d : t.pattern->discontinuities()) cuts.push_back(d + t.shift);
  }
  return arc_rule(std::move(cuts), 1);
}

}  // namespace cognet
