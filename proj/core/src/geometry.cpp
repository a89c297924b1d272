#include "cognet/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cognet/errors.hpp"

namespace cognet {

double normalize_angle(double radians) {
  if (radians >= -kPi && radians < kPi) return radians;
  double r = std::fmod(radians + kPi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  r -= kPi;
  if (r >= kPi) r = -kPi;
  return r;
}

double Vec2::norm() const { return std::hypot(x, y); }

double Vec2::bearing() const { return std::atan2(y, x); }

PolarPoint::PolarPoint(double radius, Angle angle) : radius_(radius), angle_(angle) {
  if (!(radius >= 0.0)) throw DomainError("polar radius must be >= 0");
}

Vec2 PolarPoint::cartesian() const {
  return {radius_ * std::cos(angle_.radians()), radius_ * std::sin(angle_.radians())};
}

PolarPoint PolarPoint::from_cartesian(Vec2 v) {
  const double r = v.norm();
  return PolarPoint(r, Angle(r > 0.0 ? v.bearing() : 0.0));
}

PrimaryPlacement PrimaryPlacement::fixed(PlacementPose pose) {
  if (!std::isfinite(pose.x_p) || pose.x_p < 0.0)
    throw DomainError("fixed placement needs a finite x_p >= 0");
  PrimaryPlacement p;
  p.pose_ = pose;
  return p;
}

PrimaryPlacement PrimaryPlacement::random(double region_radius, RadialLaw law) {
  if (!(region_radius > 0.0) || !std::isfinite(region_radius))
    throw DomainError("random placement needs R > 0");
  PrimaryPlacement p;
  p.random_ = true;
  p.region_radius_ = region_radius;
  p.law_ = law;
  return p;
}

const PlacementPose& PrimaryPlacement::pose() const {
  if (random_) throw DomainError("placement is random; no fixed pose");
  return pose_;
}

PlacementPose PrimaryPlacement::pose_from_uniforms(double u_radius, double u_delta,
                                                   double u_omega) const {
  if (!random_) return pose_;
  PlacementPose p;
  if (law_ == RadialLaw::uniform_disk) {
    p.x_p = std::sqrt(u_radius) * region_radius_;
    p.delta_p = Angle(kTwoPi * u_delta);
    p.omega_p = Angle(kTwoPi * u_omega);
  } else {
    p.x_p = 0.5 * region_radius_ * std::sqrt(u_radius);
    p.delta_p = Angle(kPi * u_delta);
    p.omega_p = Angle(kPi * u_omega);
  }
  return p;
}

Vec2 primary_tx_position(const PlacementPose& pose) {
  return PolarPoint(pose.x_p, pose.delta_p).cartesian();
}

namespace {

Vec2 rx_cartesian(const PlacementPose& pose, double r_p) {
  return primary_tx_position(pose) + PolarPoint(r_p, pose.omega_p).cartesian();
}

}  // namespace

PolarPoint primary_rx_position(const PlacementPose& pose, double r_p) {
  if (!(r_p > 0.0)) throw DomainError("r_p must be > 0");
  return PolarPoint::from_cartesian(rx_cartesian(pose, r_p));
}

PlacementPose placement_from_endpoints(Vec2 tx, Vec2 rx) {
  PlacementPose p;
  p.x_p = tx.norm();
  p.delta_p = Angle(p.x_p > 0.0 ? tx.bearing() : 0.0);
  p.omega_p = Angle((rx - tx).bearing());
  return p;
}

double cross_distance_z(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  return (sec_tx.cartesian() - rx_cartesian(pose, r_p)).norm();
}

Angle cross_bearing_beta(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  const Vec2 d = sec_tx.cartesian() - rx_cartesian(pose, r_p);
  if (d.x == 0.0 && d.y == 0.0) throw DomainError("undefined bearing");
  return Angle(d.bearing());
}

namespace closed_form {

double cross_distance_z(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  const double x = sec_tx.radius();
  const double th = sec_tx.angle().radians();
  const double xp = pose.x_p;
  const double dp = pose.delta_p.radians();
  const double wp = pose.omega_p.radians();
  const double z2 = x * x + r_p * r_p + xp * xp - 2.0 * r_p * x * std::cos(th - wp) -
                    2.0 * xp * x * std::cos(th - dp) + 2.0 * xp * r_p * std::cos(dp - wp);
  return std::sqrt(std::max(z2, 0.0));
}

double beta_variant_a(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  const double x = sec_tx.radius();
  const double th = sec_tx.angle().radians();
  const double yp = primary_rx_position(pose, r_p).radius();
  const double d = pose.delta_p.radians() - pose.omega_p.radians();
  const double inner = std::asin(pose.x_p / yp * std::sin(d));
  return th - std::asin(yp / x * std::sin(d + inner));
}

namespace {

double variant_b_outer(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  const double th = sec_tx.angle().radians();
  const double yp = primary_rx_position(pose, r_p).radius();
  const double z = closed_form::cross_distance_z(sec_tx, pose, r_p);
  const double d = pose.delta_p.radians() - pose.omega_p.radians();
  const double inner = std::asin(r_p / yp * std::sin(d));
  return std::asin(yp / z * std::sin(th - pose.delta_p.radians() + inner));
}

}  // namespace

double beta_variant_b(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  return sec_tx.angle().radians() - variant_b_outer(sec_tx, pose, r_p);
}

double beta_variant_b_flipped(const PolarPoint& sec_tx, const PlacementPose& pose, double r_p) {
  return sec_tx.angle().radians() + variant_b_outer(sec_tx, pose, r_p);
}

}  // namespace closed_form

}  // namespace cognet
