#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "shadowlab/geometry.hpp"
#include "shadowlab/random.hpp"

namespace shadowlab {

/// Run-level configuration failure (e.g. a goodness-of-fit bin too thin for
/// the requested sample size). Distinct from precondition violations.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Execution policy for the kernels below. Both paths share the same chunk
/// layout and produce bit-identical results; `serial` is the reference
/// implementation kept for testing and benchmarking.
enum class Execution { serial, parallel };

/// Source of shadow-angle draws for goodness-of-fit runs.
enum class GofSource { geometric, inverse_cdf };

/// Monte Carlo work is split into fixed chunks of this many draws. Chunk i
/// runs on substream i of the caller's stream, and partial sums merge in
/// chunk-index order, so results are independent of the thread count.
inline constexpr std::uint64_t kChunkDraws = std::uint64_t{1} << 16;

/// 99.9% quantile of the chi-square distribution with 35 degrees of
/// freedom (standard tables; e.g. scipy.stats.chi2.ppf(0.999, 35) =
/// 66.6188...). Gate for the default 36-bin goodness-of-fit report.
inline constexpr double kChiSquareCrit999Dof35 = 66.619;

struct RiskEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n_samples)
  std::uint64_t n_samples = 0;
};

struct MeanShadowEstimate {
  PlanePoint mean;
  double se_x = 0.0;
  double se_y = 0.0;
  std::uint64_t n_samples = 0;
};

struct GofReport {
  double statistic = 0.0;
  int dof = 0;  // bins - 1
  int bins = 0;
  std::uint64_t n_samples = 0;
};

struct RiskCurveRow {
  double c = 0.0;
  double rho = 0.0;
  double mc_mean = 0.0;
  double mc_std_error = 0.0;
  double closed_form = 0.0;
};

struct GaussianVarianceReport {
  double mean_s2 = 0.0;
  double se_s2 = 0.0;
  double mean_t2 = 0.0;
  double se_t2 = 0.0;
  double mse_s2 = 0.0;
  double mse_s2_se = 0.0;
  double mse_t2 = 0.0;
  double mse_t2_se = 0.0;
  std::uint64_t n_replications = 0;
};

/// Empirical mean of the shadow point (cos Theta, sin Theta) over n
/// geometric simulations, with per-coordinate standard errors.
/// Converges to -mu/2. Requires n >= 100 and mu in the closed disk.
MeanShadowEstimate estimate_mean_shadow(PlanePoint mu, std::uint64_t n, RandomStream stream,
                                        Execution exec = Execution::parallel);

/// Sample mean and standard error of |c*X - mu|^2 over n simulations.
RiskEstimate estimate_shadow_risk(PlanePoint mu, double c, std::uint64_t n, RandomStream stream,
                                  Execution exec = Execution::parallel);

/// Chi-square goodness of fit of simulated shadow angles against the
/// closed-form law, over equal-width angle bins. Expected counts come from
/// the law's CDF; every bin must expect at least 5 draws or a ConfigError
/// is thrown (raise n or lower bins; bites only near rho = 1).
/// Requires bins >= 2 and n >= 50 * bins.
GofReport chi_square_gof(PlanePoint mu, std::uint64_t n, int bins, GofSource source,
                         RandomStream stream, Execution exec = Execution::parallel);

/// One row per (c, rho) pair with phi = 0; c is the outer loop. Each row
/// carries the Monte Carlo risk and the closed-form value from shadow_mse.
/// Empty grids raise ConfigError.
std::vector<RiskCurveRow> risk_curve(std::span<const double> c_values,
                                     std::span<const double> rho_values, std::uint64_t n,
                                     RandomStream stream, Execution exec = Execution::parallel);

/// Replicated Gaussian sampling experiment: draws `replications` samples of
/// n_obs centered normals with variance sigma2 and reports empirical means,
/// standard errors and MSEs of the two variance estimators S^2 and T^2.
GaussianVarianceReport gaussian_variance_experiment(int n_obs, double sigma2,
                                                    std::uint64_t replications,
                                                    RandomStream stream,
                                                    Execution exec = Execution::parallel);

}  // namespace shadowlab
