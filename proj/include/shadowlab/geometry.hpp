#pragma once

#include <stdexcept>

#include "shadowlab/random.hpp"

namespace shadowlab {

inline constexpr double kPi = 3.14159265358979323846264338328;
inline constexpr double kTwoPi = 6.28318530717958647692528676656;

/// Tolerance for disk/boundary membership checks.
inline constexpr double kDiskTol = 1e-12;

/// Darts closer than this to the light source cast no usable shadow.
inline constexpr double kDegenerateRayTol = 1e-14;

/// A location in (or derived from) the unit disk, Cartesian form.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Polar form; rho in [0, 1], phi in [0, 2*pi).
struct PolarPoint {
  double rho = 0.0;
  double phi = 0.0;
};

/// Thrown by cast_shadow when the dart coincides with the light source.
/// Monte Carlo drivers treat it as a resample signal.
class DegenerateRayError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

constexpr double squared_norm(PlanePoint p) { return p.x * p.x + p.y * p.y; }

inline double norm(PlanePoint p) { return std::hypot(p.x, p.y); }

inline double distance(PlanePoint a, PlanePoint b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

constexpr bool inside_closed_disk(PlanePoint p, double tol = kDiskTol) {
  return squared_norm(p) <= 1.0 + tol;
}

/// Reduces any finite angle into [0, 2*pi).
double reduce_angle(double theta);

PlanePoint polar_to_cartesian(PolarPoint p);

/// Inverse of polar_to_cartesian; the centre maps to phi = 0 by convention.
/// Throws std::domain_error for points outside the closed disk.
PolarPoint cartesian_to_polar(PlanePoint p);

/// Square-root radius transform: r = sqrt(u1), angle = 2*pi*u2. Covers the
/// closed disk uniformly when (u1, u2) are independent uniforms on [0, 1].
PlanePoint disk_point_from_uniforms(double u1, double u2);

/// Uniform draw from the unit disk; consumes exactly two uniforms (u1, u2).
PlanePoint sample_uniform_disk(RandomEngine& rng);

/// Angle of the shadow cast on the boundary circle by a light source at mu
/// shining past a dart at u: the unique boundary point mu + t*(u - mu) with
/// t > 0 on the far side of the dart. Throws DegenerateRayError when the
/// dart coincides with the source.
double cast_shadow(PlanePoint mu, PlanePoint u);

/// The boundary point (cos theta, sin theta).
inline PlanePoint boundary_point(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace shadowlab
