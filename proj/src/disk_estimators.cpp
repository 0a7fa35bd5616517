#include "shadowlab/disk_estimators.hpp"

#include <cmath>

#include "shadowlab/quadrature.hpp"

namespace shadowlab {

PlanePoint linear_estimate(LinearShadowEstimator est, double theta) {
  if (!std::isfinite(est.c))
    throw std::domain_error("linear_estimate: coefficient must be finite");
  return {est.c * std::cos(theta), est.c * std::sin(theta)};
}

double posterior_density(PosteriorLaw law, double rho, double phi) {
  if (!(rho >= 0.0 && rho <= 1.0))
    throw std::domain_error("posterior_density: require 0 <= rho <= 1");
  return (1.0 - rho * std::cos(law.theta - phi)) * rho / kPi;
}

PlanePoint posterior_mean_numeric(PosteriorLaw law, int panels) {
  if (panels < 8)
    throw std::invalid_argument("posterior_mean_numeric: panels must be >= 8");
  if (panels % 2 != 0)
    throw std::invalid_argument("posterior_mean_numeric: panels must be even");
  const auto moment = [&](auto&& weight) {
    return composite_simpson(
        [&](double phi) {
          return composite_simpson(
              [&](double rho) { return weight(rho, phi) * posterior_density(law, rho, phi); },
              0.0, 1.0, panels);
        },
        0.0, kTwoPi, panels);
  };
  const double mx = moment([](double rho, double phi) { return rho * std::cos(phi); });
  const double my = moment([](double rho, double phi) { return rho * std::sin(phi); });
  return {mx, my};
}

double shadow_mse(double c, double rho) {
  if (!std::isfinite(c))
    throw std::domain_error("shadow_mse: c must be finite");
  if (!(rho >= 0.0 && rho <= 1.0))
    throw std::domain_error("shadow_mse: require 0 <= rho <= 1");
  return c * c + rho * rho * (1.0 + c);
}

double bayes_risk(double c) {
  if (!std::isfinite(c))
    throw std::domain_error("bayes_risk: c must be finite");
  return c * c + 0.5 * c + 0.5;
}

BayesRiskMinimum minimize_bayes_risk(double c_lo, double c_hi, double step) {
  if (!(c_lo <= c_hi) || !(step > 0.0))
    throw std::domain_error("minimize_bayes_risk: empty grid (require c_lo <= c_hi and step > 0)");
  // Grid points are c_lo + i*step (no running accumulation). When the span
  // is an integral number of steps up to rounding, the far endpoint is kept.
  const double ratio = (c_hi - c_lo) / step;
  long long n = static_cast<long long>(std::floor(ratio));
  if (std::abs(ratio - static_cast<double>(std::llround(ratio))) <
      1e-9 * std::max(1.0, std::abs(ratio)))
    n = std::llround(ratio);
  BayesRiskMinimum best{c_lo, bayes_risk(c_lo)};
  for (long long i = 1; i <= n; ++i) {
    const double c = c_lo + static_cast<double>(i) * step;
    const double r = bayes_risk(c);
    if (r < best.risk) best = {c, r};  // ties keep the smaller c
  }
  return best;
}

}  // namespace shadowlab
