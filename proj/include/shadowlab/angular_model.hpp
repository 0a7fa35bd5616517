#pragma once

#include "shadowlab/geometry.hpp"
#include "shadowlab/random.hpp"

namespace shadowlab {

/// Absolute tolerance of the bisection behind inverse_cdf / sample_theta.
inline constexpr double kInverseCdfTol = 1e-12;

/// Closed-form law of the shadow angle for a light source at `source`:
/// density (1 - rho*cos(theta - phi)) / (2*pi) on [0, 2*pi).
class AngularLaw {
 public:
  explicit AngularLaw(PolarPoint source);
  explicit AngularLaw(PlanePoint source);

  const PolarPoint& source() const { return source_; }

 private:
  PolarPoint source_;
};

/// Density at theta (any finite angle; the formula is 2*pi-periodic).
/// Bounded by (1 + rho) / (2*pi).
double density(const AngularLaw& law, double theta);

/// Distribution function on [0, 2*pi]:
/// F(theta) = (theta - rho*(sin(theta - phi) + sin(phi))) / (2*pi).
/// Throws std::domain_error outside the interval.
double cdf(const AngularLaw& law, double theta);

/// F^{-1}(u) by bisection on [0, 2*pi] to absolute tolerance kInverseCdfTol.
/// Bisection stays robust where the density vanishes (rho = 1, theta = phi).
double inverse_cdf(const AngularLaw& law, double u);

/// Exact sampler: inverse_cdf applied to one uniform draw.
double sample_theta(const AngularLaw& law, RandomEngine& rng);

}  // namespace shadowlab
