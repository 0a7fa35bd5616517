#include "shadowlab/classic_counterexamples.hpp"

#include <cmath>
#include <span>
#include <stdexcept>

namespace shadowlab {
namespace {

// x! as exact doubles for x <= 20 (20! = 2432902008176640000 < 2^62 with
// enough trailing binary zeros to stay exact).
constexpr double kFactorial[] = {
    1.0,
    1.0,
    2.0,
    6.0,
    24.0,
    120.0,
    720.0,
    5040.0,
    40320.0,
    362880.0,
    3628800.0,
    39916800.0,
    479001600.0,
    6227020800.0,
    87178291200.0,
    1307674368000.0,
    20922789888000.0,
    355687428096000.0,
    6402373705728000.0,
    121645100408832000.0,
    2432902008176640000.0,
};
constexpr std::int64_t kLogSpaceThreshold = 20;

void validate_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::domain_error("lambda must be finite and >= 0");
}

double centered_sum_of_squares(std::span<const double> xs) {
  double mean = 0.0;
  for (double v : xs) mean += v;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double v : xs) {
    const double d = v - mean;
    ss += d * d;
  }
  return ss;
}

}  // namespace

double poisson_pmf(std::int64_t x, double lambda) {
  if (x < 0) throw std::domain_error("poisson_pmf: x must be >= 0");
  validate_lambda(lambda);
  if (lambda == 0.0) return x == 0 ? 1.0 : 0.0;
  if (x <= kLogSpaceThreshold)
    return std::pow(lambda, static_cast<double>(x)) * std::exp(-lambda) / kFactorial[x];
  const double xd = static_cast<double>(x);
  return std::exp(xd * std::log(lambda) - lambda - std::lgamma(xd + 1.0));
}

double unbiased_delta(std::int64_t x) {
  if (x < 0) throw std::domain_error("unbiased_delta: x must be >= 0");
  return (x % 2 == 0) ? 1.0 : -1.0;
}

double mle_estimate(std::int64_t x) {
  if (x < 0) throw std::domain_error("mle_estimate: x must be >= 0");
  return std::exp(-2.0 * static_cast<double>(x));
}

double unbiasedness_partial_sum(double lambda, int n_terms) {
  validate_lambda(lambda);
  if (n_terms < 1) throw std::domain_error("unbiasedness_partial_sum: n_terms must be >= 1");
  double term = std::exp(-lambda);  // pmf at x = 0
  double sum = term;                // delta(0) = +1
  for (int x = 1; x < n_terms; ++x) {
    term *= lambda / x;
    sum += (x % 2 == 0) ? term : -term;
  }
  return sum;
}

double poisson_estimator_mse(PoissonEstimatorKind kind, double lambda) {
  validate_lambda(lambda);
  const double target = std::exp(-2.0 * lambda);
  if (kind == PoissonEstimatorKind::unbiased) {
    // delta^2 == 1 and E[delta] equals the target
    return 1.0 - std::exp(-4.0 * lambda);
  }
  const double m2 = std::exp(lambda * (std::exp(-2.0) - 1.0));
  const double m4 = std::exp(lambda * (std::exp(-4.0) - 1.0));
  return m4 - 2.0 * target * m2 + target * target;
}

double s_squared(const NormalSampleStats& stats) {
  if (stats.values.size() < 2)
    throw std::domain_error("s_squared: need at least two observations");
  return centered_sum_of_squares(stats.values) /
         static_cast<double>(stats.values.size() - 1);
}

double t_squared(const NormalSampleStats& stats) {
  if (stats.values.size() < 2)
    throw std::domain_error("t_squared: need at least two observations");
  return centered_sum_of_squares(stats.values) / static_cast<double>(stats.values.size());
}

VarianceMse variance_estimator_mse(int n, double sigma2) {
  if (n < 2) throw std::domain_error("variance_estimator_mse: n must be >= 2");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw std::domain_error("variance_estimator_mse: sigma2 must be finite and > 0");
  const double s4 = sigma2 * sigma2;
  const double nd = static_cast<double>(n);
  return {2.0 * s4 / (nd - 1.0), (2.0 * nd - 1.0) * s4 / (nd * nd)};
}

}  // namespace shadowlab
