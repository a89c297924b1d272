#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cognet/geometry.hpp"

namespace cognet {

struct OmniPattern {};

struct SectorizedPattern {
  double main_gain = 1.0;
  double side_gain = 1.0;
  double beamwidth = kTwoPi;
};

// Sectorized pattern with zero side lobe.
struct IdealPattern {
  double main_gain = 1.0;
  double beamwidth = kTwoPi;
};

struct TabulatedPattern {
  // Uniform samples over [-pi, pi): sample k sits at -pi + 2*pi*k/N.
  std::vector<double> samples;
};

enum class PatternKind { omni, sectorized, ideal, tabulated };

inline constexpr int kDefaultTableSize = 4096;

class BeamPattern {
 public:
  BeamPattern() = default;  // omni

  static BeamPattern omni();
  static BeamPattern sectorized(double main_gain, double side_gain, double beamwidth);
  static BeamPattern ideal(double main_gain, double beamwidth);
  static BeamPattern tabulated(std::vector<double> samples);
  static BeamPattern tabulated(const std::function<double(double)>& gain_of_angle,
                               int n = kDefaultTableSize);

  PatternKind kind() const noexcept;
  double gain(Angle theta) const;
  double gain(double theta_radians) const { return gain(Angle(theta_radians)); }

  // Gain jumps, as offsets from boresight in [-pi, pi). Empty for omni and
  // tabulated patterns.
  std::vector<double> discontinuities() const;
  bool piecewise_constant() const noexcept;

  // Main/side gain and beamwidth; omni reports (1, 1, 2pi). Throws for
  // tabulated patterns.
  double main_gain() const;
  double side_gain() const;
  double beamwidth() const;

  // a*q + b*(1-q) - 1 for sectorized/ideal patterns, 0 for omni.
  double normalization_residual() const;

  const std::variant<OmniPattern, SectorizedPattern, IdealPattern, TabulatedPattern>& data()
      const noexcept {
    return data_;
  }

  std::string describe() const;

 private:
  std::variant<OmniPattern, SectorizedPattern, IdealPattern, TabulatedPattern> data_;
};

inline constexpr double kDefaultKappaDeg = 121.0;

struct UlaSpec {
  int elements = 2;
  double kappa = kDefaultKappaDeg * kPi / 180.0;

  double kappa_prime() const noexcept { return kappa / kTwoPi; }
  double q() const noexcept { return kappa_prime() / elements; }
};

// phi = kappa/M, a = M, b = (1 - kappa')/(1 - kappa'/M). M <= 1 throws.
BeamPattern from_ula(const UlaSpec& ula);
// Same, but M == 1 gives an omni pattern.
BeamPattern ula_or_omni(int elements, double kappa = kDefaultKappaDeg * kPi / 180.0);

// q = phi/(2 pi); throws DomainError for omni and tabulated patterns.
double main_lobe_probability(const BeamPattern& p);

// E[g(Theta)^e] with Theta ~ U[-pi, pi).
double expected_gain_power(const BeamPattern& p, double exponent);

// Ideal counterpart used by the beamwidth/gain trade-off diagnostics:
// sectorized and ideal map to ideal{a, phi}, omni maps to ideal{1, 2pi}.
BeamPattern ideal_counterpart(const BeamPattern& p);

struct DevicePatterns {
  BeamPattern pt;  // primary transmitter
  BeamPattern pr;  // primary receiver
  BeamPattern st;  // secondary transmitters
  BeamPattern sr;  // secondary receivers
};

// Weighted nodes on the circle [-pi, pi); weights sum to 1 so a weighted
// sum is the average over a uniform angle.
struct CircleRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Uniform periodic trapezoid rule.
CircleRule periodic_trapezoid(int n = 512);

// Splits the circle at the given breakpoints and places Gauss-Legendre
// nodes in each arc. With nodes_per_arc == 1 this is the arc-midpoint rule,
// exact for piecewise-constant integrands with jumps only at breakpoints.
CircleRule arc_rule(std::vector<double> breakpoints, int nodes_per_arc);

// A pattern evaluated at (angle - shift).
struct PatternTerm {
  const BeamPattern* pattern;
  double shift = 0.0;
};

// Averaging rule over a uniform angle for integrands built from the given
// pattern terms. Exact arc decomposition when every pattern is piecewise
// constant, 512-node trapezoid otherwise.
CircleRule pattern_rule(const std::vector<PatternTerm>& terms);

}  // namespace cognet
