#include "shadowlab/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shadowlab/angular_model.hpp"
#include "shadowlab/classic_counterexamples.hpp"
#include "shadowlab/disk_estimators.hpp"

namespace shadowlab {
namespace {

// Runs fn once per fixed-size chunk, chunk i on substream i. Each chunk
// writes its own slot; the caller merges slots in index order, which keeps
// results bit-identical for any thread count (and for the serial path).
template <class Partial, class ChunkFn>
std::vector<Partial> run_chunks(std::uint64_t n, RandomStream stream, Execution exec,
                                ChunkFn&& fn) {
  const std::uint64_t n_chunks = (n + kChunkDraws - 1) / kChunkDraws;
  std::vector<Partial> partials(static_cast<std::size_t>(n_chunks));
  const auto run_one = [&](std::uint64_t i) {
    const std::uint64_t begin = i * kChunkDraws;
    const std::uint64_t count = std::min<std::uint64_t>(kChunkDraws, n - begin);
    RandomEngine engine(stream.substream(i));
    fn(engine, count, partials[static_cast<std::size_t>(i)]);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n_chunks); ++i)
      run_one(static_cast<std::uint64_t>(i));
  } else {
    for (std::uint64_t i = 0; i < n_chunks; ++i) run_one(i);
  }
  return partials;
}

// One dart -> shadow angle; the measure-zero degenerate throw is resampled
// and counted so the run can fail loudly if it ever becomes frequent.
double draw_shadow_angle(PlanePoint mu, RandomEngine& engine, std::uint64_t& degenerate) {
  for (;;) {
    const PlanePoint u = sample_uniform_disk(engine);
    const double dx = u.x - mu.x;
    const double dy = u.y - mu.y;
    if (dx * dx + dy * dy < kDegenerateRayTol * kDegenerateRayTol) {
      ++degenerate;
      continue;
    }
    return cast_shadow(mu, u);
  }
}

// More than 10 resamples per 1e6 draws signals an RNG or geometry defect.
void check_degenerate_budget(std::uint64_t degenerate, std::uint64_t n) {
  if (static_cast<double>(degenerate) > 10.0 * static_cast<double>(n) / 1e6)
    throw ConfigError("degenerate-dart budget exceeded: " + std::to_string(degenerate) +
                      " resamples in " + std::to_string(n) + " draws");
}

void validate_shadow_run(PlanePoint mu, std::uint64_t n) {
  if (n < 100) throw std::invalid_argument("samples: require n >= 100");
  if (!inside_closed_disk(mu))
    throw std::domain_error("mu: point must lie in the closed unit disk");
}

double standard_error(double sum, double sum_sq, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  const double mean = sum / nd;
  const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));
  return std::sqrt(var / nd);
}

}  // namespace

MeanShadowEstimate estimate_mean_shadow(PlanePoint mu, std::uint64_t n, RandomStream stream,
                                        Execution exec) {
  validate_shadow_run(mu, n);
  struct Partial {
    double sx = 0, sy = 0, sxx = 0, syy = 0;
    std::uint64_t degenerate = 0;
  };
  auto partials =
      run_chunks<Partial>(n, stream, exec, [mu](RandomEngine& eng, std::uint64_t count, Partial& p) {
        for (std::uint64_t k = 0; k < count; ++k) {
          const double theta = draw_shadow_angle(mu, eng, p.degenerate);
          const double cx = std::cos(theta);
          const double cy = std::sin(theta);
          p.sx += cx;
          p.sy += cy;
          p.sxx += cx * cx;
          p.syy += cy * cy;
        }
      });
  Partial total;
  for (const Partial& p : partials) {
    total.sx += p.sx;
    total.sy += p.sy;
    total.sxx += p.sxx;
    total.syy += p.syy;
    total.degenerate += p.degenerate;
  }
  check_degenerate_budget(total.degenerate, n);
  const double nd = static_cast<double>(n);
  return {{total.sx / nd, total.sy / nd},
          standard_error(total.sx, total.sxx, n),
          standard_error(total.sy, total.syy, n),
          n};
}

RiskEstimate estimate_shadow_risk(PlanePoint mu, double c, std::uint64_t n, RandomStream stream,
                                  Execution exec) {
  validate_shadow_run(mu, n);
  if (!std::isfinite(c)) throw std::domain_error("c: coefficient must be finite");
  struct Partial {
    double s = 0, ss = 0;
    std::uint64_t degenerate = 0;
  };
  auto partials = run_chunks<Partial>(
      n, stream, exec, [mu, c](RandomEngine& eng, std::uint64_t count, Partial& p) {
        for (std::uint64_t k = 0; k < count; ++k) {
          const double theta = draw_shadow_angle(mu, eng, p.degenerate);
          const double ex = c * std::cos(theta) - mu.x;
          const double ey = c * std::sin(theta) - mu.y;
          const double loss = ex * ex + ey * ey;
          p.s += loss;
          p.ss += loss * loss;
        }
      });
  Partial total;
  for (const Partial& p : partials) {
    total.s += p.s;
    total.ss += p.ss;
    total.degenerate += p.degenerate;
  }
  check_degenerate_budget(total.degenerate, n);
  return {total.s / static_cast<double>(n), standard_error(total.s, total.ss, n), n};
}

GofReport chi_square_gof(PlanePoint mu, std::uint64_t n, int bins, GofSource source,
                         RandomStream stream, Execution exec) {
  if (bins < 2) throw std::invalid_argument("bins: require bins >= 2");
  if (n < 50 * static_cast<std::uint64_t>(bins))
    throw std::invalid_argument("samples: require n >= 50 * bins");
  if (!inside_closed_disk(mu))
    throw std::domain_error("mu: point must lie in the closed unit disk");

  const AngularLaw law(mu);
  const double nd = static_cast<double>(n);
  std::vector<double> expected(static_cast<std::size_t>(bins));
  for (int k = 0; k < bins; ++k) {
    const double lo = kTwoPi * k / bins;
    const double hi = (k + 1 == bins) ? kTwoPi : kTwoPi * (k + 1) / bins;
    expected[static_cast<std::size_t>(k)] = nd * (cdf(law, hi) - cdf(law, lo));
    if (expected[static_cast<std::size_t>(k)] < 5.0)
      throw ConfigError("chi_square_gof: expected count below 5 in bin " + std::to_string(k) +
                        "; raise samples or lower bins");
  }

  struct Partial {
    std::vector<std::uint64_t> counts;
    std::uint64_t degenerate = 0;
  };
  const double inv_width = bins / kTwoPi;
  auto partials = run_chunks<Partial>(
      n, stream, exec, [&](RandomEngine& eng, std::uint64_t count, Partial& p) {
        p.counts.assign(static_cast<std::size_t>(bins), 0);
        for (std::uint64_t k = 0; k < count; ++k) {
          const double theta = source == GofSource::geometric
                                   ? draw_shadow_angle(mu, eng, p.degenerate)
                                   : sample_theta(law, eng);
          const int idx = std::min(bins - 1, static_cast<int>(theta * inv_width));
          ++p.counts[static_cast<std::size_t>(idx)];
        }
      });

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
  std::uint64_t degenerate = 0;
  for (const Partial& p : partials) {
    for (int k = 0; k < bins; ++k)
      counts[static_cast<std::size_t>(k)] += p.counts[static_cast<std::size_t>(k)];
    degenerate += p.degenerate;
  }
  check_degenerate_budget(degenerate, n);

  double statistic = 0.0;
  for (int k = 0; k < bins; ++k) {
    const double diff = static_cast<double>(counts[static_cast<std::size_t>(k)]) -
                        expected[static_cast<std::size_t>(k)];
    statistic += diff * diff / expected[static_cast<std::size_t>(k)];
  }
  return {statistic, bins - 1, bins, n};
}

std::vector<RiskCurveRow> risk_curve(std::span<const double> c_values,
                                     std::span<const double> rho_values, std::uint64_t n,
                                     RandomStream stream, Execution exec) {
  if (c_values.empty()) throw ConfigError("risk_curve: empty c grid");
  if (rho_values.empty()) throw ConfigError("risk_curve: empty rho grid");
  std::vector<RiskCurveRow> rows;
  rows.reserve(c_values.size() * rho_values.size());
  std::uint64_t row_index = 0;
  for (const double c : c_values) {
    for (const double rho : rho_values) {
      const double closed_form = shadow_mse(c, rho);  // validates rho
      const RiskEstimate est =
          estimate_shadow_risk({rho, 0.0}, c, n, stream.substream(row_index), exec);
      rows.push_back({c, rho, est.mean, est.std_error, closed_form});
      ++row_index;
    }
  }
  return rows;
}

GaussianVarianceReport gaussian_variance_experiment(int n_obs, double sigma2,
                                                    std::uint64_t replications,
                                                    RandomStream stream, Execution exec) {
  if (n_obs < 2) throw std::invalid_argument("n: require n >= 2");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw std::domain_error("sigma2: must be finite and > 0");
  if (replications < 100) throw std::invalid_argument("samples: require replications >= 100");

  const double sigma = std::sqrt(sigma2);
  struct Partial {
    double s2 = 0, s2_sq = 0, t2 = 0, t2_sq = 0;
    double ds = 0, ds_sq = 0, dt = 0, dt_sq = 0;
  };
  auto partials = run_chunks<Partial>(
      replications, stream, exec, [&](RandomEngine& eng, std::uint64_t count, Partial& p) {
        NormalSampleStats sample;
        sample.values.resize(static_cast<std::size_t>(n_obs));
        for (std::uint64_t r = 0; r < count; ++r) {
          for (double& v : sample.values) v = sigma * eng.next_normal();
          const double s2 = s_squared(sample);
          const double t2 = t_squared(sample);
          const double ds = (s2 - sigma2) * (s2 - sigma2);
          const double dt = (t2 - sigma2) * (t2 - sigma2);
          p.s2 += s2;
          p.s2_sq += s2 * s2;
          p.t2 += t2;
          p.t2_sq += t2 * t2;
          p.ds += ds;
          p.ds_sq += ds * ds;
          p.dt += dt;
          p.dt_sq += dt * dt;
        }
      });
  Partial total;
  for (const Partial& p : partials) {
    total.s2 += p.s2;
    total.s2_sq += p.s2_sq;
    total.t2 += p.t2;
    total.t2_sq += p.t2_sq;
    total.ds += p.ds;
    total.ds_sq += p.ds_sq;
    total.dt += p.dt;
    total.dt_sq += p.dt_sq;
  }
  const double rd = static_cast<double>(replications);
  return {total.s2 / rd,
          standard_error(total.s2, total.s2_sq, replications),
          total.t2 / rd,
          standard_error(total.t2, total.t2_sq, replications),
          total.ds / rd,
          standard_error(total.ds, total.ds_sq, replications),
          total.dt / rd,
          standard_error(total.dt, total.dt_sq, replications),
          replications};
}

}  // namespace shadowlab
