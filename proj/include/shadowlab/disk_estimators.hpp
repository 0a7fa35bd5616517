#pragma once

#include "shadowlab/geometry.hpp"

namespace shadowlab {

/// Estimator of the source location of the form c * X, where X is the
/// observed boundary shadow point.
struct LinearShadowEstimator {
  double c = 0.0;
};

/// The rotation-invariant pre-data guess.
inline constexpr double kPriorCoefficient = 0.0;
/// The only coefficient with E(cX) = mu uniformly over the disk.
inline constexpr double kUnbiasedCoefficient = -2.0;
/// Posterior mean under the uniform-disk prior.
inline constexpr double kBayesCoefficient = -0.25;

/// c * (cos theta, sin theta). For c = -2 the estimate always lies a full
/// radius outside the disk.
PlanePoint linear_estimate(LinearShadowEstimator est, double theta);

/// Conditional law of the source (rho, phi) given an observed shadow angle:
/// density (1 - rho*cos(theta - phi)) * rho / pi on [0,1] x [0, 2*pi).
struct PosteriorLaw {
  double theta = 0.0;
};

/// Density with respect to d(rho) d(phi); throws for rho outside [0, 1].
double posterior_density(PosteriorLaw law, double rho, double phi);

/// Posterior mean of the source by 2-D composite Simpson quadrature with
/// `panels` subintervals per axis (even, >= 8). Converges to
/// -(cos theta, sin theta) / 4.
PlanePoint posterior_mean_numeric(PosteriorLaw law, int panels);

/// Exact frequentist risk E|cX - mu|^2 at source radius rho:
/// c^2 + rho^2 * (1 + c).
double shadow_mse(double c, double rho);

/// Risk averaged over the uniform-disk prior: c^2 + c/2 + 1/2.
/// Minimized at c = -1/4.
double bayes_risk(double c);

struct BayesRiskMinimum {
  double c_star = 0.0;
  double risk = 0.0;
};

/// Grid argmin of bayes_risk over {c_lo + i*step} up to c_hi; ties keep the
/// smaller coefficient. Throws std::domain_error for an empty grid
/// (c_lo > c_hi or step <= 0).
BayesRiskMinimum minimize_bayes_risk(double c_lo, double c_hi, double step);

}  // namespace shadowlab
