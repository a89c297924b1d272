#pragma once

#include <numbers>

namespace cognet {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Maps any finite angle to [-pi, pi). Values already in range are returned
// unchanged, so normalization is exactly idempotent.
double normalize_angle(double radians);

class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(normalize_angle(radians)) {}

  static Angle from_degrees(double deg) { return Angle(deg * kPi / 180.0); }

  double radians() const noexcept { return value_; }
  double degrees() const noexcept { return value_ * 180.0 / kPi; }

  Angle operator+(Angle o) const { return Angle(value_ + o.value_); }
  Angle operator-(Angle o) const { return Angle(value_ - o.value_); }
  Angle operator-() const { return Angle(-value_); }
  bool operator==(const Angle&) const = default;

 private:
  double value_ = 0.0;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double norm() const;
  // Two-argument arctangent bearing; requires a nonzero vector.
  double bearing() const;
};

struct PolarPoint {
  PolarPoint() = default;
  PolarPoint(double radius, Angle angle);

  double radius() const noexcept { return radius_; }
  Angle angle() const noexcept { return angle_; }
  Vec2 cartesian() const;
  static PolarPoint from_cartesian(Vec2 v);

 private:
  double radius_ = 0.0;
  Angle angle_;
};

// Pose of the primary link in the typical-secondary frame: the primary
// transmitter sits at x_p∠delta_p and the link points along omega_p.
struct PlacementPose {
  double x_p = 0.0;
  Angle delta_p;
  Angle omega_p;
};

enum class RadialLaw {
  uniform_disk,  // x_p = sqrt(U(0, R^2)), angles ~ U(0, 2pi)
  half_radius,   // x_p = (R/2) sqrt(U(0, 1)), angles ~ U(0, pi)
};

class PrimaryPlacement {
 public:
  static PrimaryPlacement fixed(PlacementPose pose);
  static PrimaryPlacement random(double region_radius, RadialLaw law = RadialLaw::uniform_disk);

  bool is_random() const noexcept { return random_; }
  // Throws DomainError when called on a random placement.
  const PlacementPose& pose() const;
  double region_radius() const noexcept { return region_radius_; }
  RadialLaw law() const noexcept { return law_; }

  // Draws a pose from the random law given two/three uniforms in [0,1).
  PlacementPose pose_from_uniforms(double u_radius, double u_delta, double u_omega) const;

 private:
  bool random_ = false;
  PlacementPose pose_;
  double region_radius_ = 0.0;
  RadialLaw law_ = RadialLaw::uniform_disk;
};

Vec2 primary_tx_position(const PlacementPose& pose);
// Y_p = X_p + r_p∠omega_p.
PolarPoint primary_rx_position(const PlacementPose& pose, double r_p);
// Recovers (x_p, delta_p, omega_p) from the two primary endpoints.
PlacementPose placement_from_endpoints(Vec2 tx, Vec2 rx);

// |X_si - Y_p|.
double cross_distance_z(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p);
// Bearing of X_si - Y_p; throws DomainError("undefined bearing") if the
// points coincide.
Angle cross_bearing_beta(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p);

namespace closed_form {

// Three-cosine expansion of |X_si - Y_p|.
double cross_distance_z(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p);

// The two nested-arcsine bearing expressions as printed; kept as test
// subjects only. See README for how they compare to the vector bearing.
double beta_variant_a(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p);
double beta_variant_b(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p);
// Variant b with the sign of the outer arcsine flipped.
double beta_variant_b_flipped(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p);

}  // namespace closed_form

}  // namespace cognet
