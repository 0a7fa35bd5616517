#pragma once

#include <cstdint>
#include <vector>

namespace shadowlab {

/// Poisson(lambda) observation model; P(X = 0)^2 = e^(-2*lambda) is the
/// quantity to estimate.
struct PoissonModel {
  double lambda = 0.0;
};

enum class PoissonEstimatorKind { unbiased, mle };

/// lambda^x e^(-lambda) / x!, computed in log space for x > 20.
double poisson_pmf(std::int64_t x, double lambda);

/// The only unbiased estimator of e^(-2*lambda): (-1)^x.
double unbiased_delta(std::int64_t x);

/// Maximum-likelihood estimator e^(-2x). Underflows gracefully to 0 for
/// huge x; the value stays within [0, 1].
double mle_estimate(std::int64_t x);

/// Partial sum of sum_x delta(x) * pmf(x); converges to e^(-2*lambda).
double unbiasedness_partial_sum(double lambda, int n_terms);

/// Exact mean squared error against the target e^(-2*lambda).
/// unbiased: 1 - e^(-4*lambda); mle: via E[e^(-tX)] = exp(lambda*(e^(-t)-1)).
double poisson_estimator_mse(PoissonEstimatorKind kind, double lambda);

/// A sample of real observations; n = values.size() must be >= 2.
struct NormalSampleStats {
  std::vector<double> values;
};

/// Unbiased variance estimator: centered sum of squares over n - 1.
/// Two-pass computation.
double s_squared(const NormalSampleStats& stats);

/// Biased variance estimator: centered sum of squares over n.
/// Satisfies t_squared = (n-1)/n * s_squared up to roundoff.
double t_squared(const NormalSampleStats& stats);

struct VarianceMse {
  double mse_s = 0.0;
  double mse_t = 0.0;
};

/// Exact Gaussian MSEs: 2*sigma^4/(n-1) for S^2 and (2n-1)*sigma^4/n^2 for
/// T^2; the latter is strictly smaller for every n >= 2.
VarianceMse variance_estimator_mse(int n, double sigma2);

}  // namespace shadowlab
