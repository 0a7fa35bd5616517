#include "shadowlab/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace shadowlab {

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // the add above can round up to exactly 2*pi
  return r;
}

PlanePoint polar_to_cartesian(PolarPoint p) {
  if (!(p.rho >= 0.0 && p.rho <= 1.0))
    throw std::domain_error("polar_to_cartesian: require 0 <= rho <= 1");
  if (!std::isfinite(p.phi))
    throw std::domain_error("polar_to_cartesian: phi must be finite");
  return {p.rho * std::cos(p.phi), p.rho * std::sin(p.phi)};
}

PolarPoint cartesian_to_polar(PlanePoint p) {
  const double r2 = squared_norm(p);
  if (!(r2 <= 1.0 + kDiskTol))
    throw std::domain_error("cartesian_to_polar: point lies outside the closed unit disk");
  if (r2 == 0.0) return {0.0, 0.0};
  const double rho = std::min(std::sqrt(r2), 1.0);
  return {rho, reduce_angle(std::atan2(p.y, p.x))};
}

PlanePoint disk_point_from_uniforms(double u1, double u2) {
  if (!(u1 >= 0.0 && u1 <= 1.0) || !(u2 >= 0.0 && u2 <= 1.0))
    throw std::domain_error("disk_point_from_uniforms: uniforms must lie in [0, 1]");
  const double r = std::sqrt(u1);
  const double a = kTwoPi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

PlanePoint sample_uniform_disk(RandomEngine& rng) {
  const double u1 = rng.next_unit();
  const double u2 = rng.next_unit();
  return disk_point_from_uniforms(u1, u2);
}

double cast_shadow(PlanePoint mu, PlanePoint u) {
  if (!inside_closed_disk(mu))
    throw std::domain_error("cast_shadow: light source must lie in the closed unit disk");
  if (!inside_closed_disk(u))
    throw std::domain_error("cast_shadow: dart must lie in the closed unit disk");
  const PlanePoint d{u.x - mu.x, u.y - mu.y};
  const double dd = squared_norm(d);
  if (dd < kDegenerateRayTol * kDegenerateRayTol)
    throw DegenerateRayError("cast_shadow: dart coincides with the light source");
  // Positive root of |mu + t*d|^2 = 1. The discriminant is non-negative for
  // any mu in the disk; clamp guards rounding when |mu| = 1.
  const double b = mu.x * d.x + mu.y * d.y;
  const double disc = std::max(0.0, b * b + dd * (1.0 - squared_norm(mu)));
  const double t = (-b + std::sqrt(disc)) / dd;
  const PlanePoint shadow{mu.x + t * d.x, mu.y + t * d.y};
  return reduce_angle(std::atan2(shadow.y, shadow.x));
}

}  // namespace shadowlab
