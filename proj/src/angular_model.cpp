#include "shadowlab/angular_model.hpp"

#include <algorithm>
#include <cmath>

namespace shadowlab {

AngularLaw::AngularLaw(PolarPoint source) : source_(source) {
  if (!(source.rho >= 0.0 && source.rho <= 1.0))
    throw std::domain_error("AngularLaw: require 0 <= rho <= 1");
  if (!std::isfinite(source.phi))
    throw std::domain_error("AngularLaw: phi must be finite");
  source_.phi = reduce_angle(source.phi);
}

AngularLaw::AngularLaw(PlanePoint source) : AngularLaw(cartesian_to_polar(source)) {}

double density(const AngularLaw& law, double theta) {
  const PolarPoint& s = law.source();
  return (1.0 - s.rho * std::cos(theta - s.phi)) / kTwoPi;
}

double cdf(const AngularLaw& law, double theta) {
  if (!(theta >= 0.0 && theta <= kTwoPi))
    throw std::domain_error("cdf: require 0 <= theta <= 2*pi");
  if (theta == 0.0) return 0.0;
  if (theta == kTwoPi) return 1.0;
  const PolarPoint& s = law.source();
  const double f = (theta - s.rho * (std::sin(theta - s.phi) + std::sin(s.phi))) / kTwoPi;
  return std::clamp(f, 0.0, 1.0);
}

double inverse_cdf(const AngularLaw& law, double u) {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::domain_error("inverse_cdf: require 0 <= u <= 1");
  double lo = 0.0;
  double hi = kTwoPi;
  while (hi - lo > kInverseCdfTol) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(law, mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double sample_theta(const AngularLaw& law, RandomEngine& rng) {
  return inverse_cdf(law, rng.next_unit());
}

}  // namespace shadowlab
