#include <cmath>
#include <cstring>
#include <limits>

#include <doctest.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "shadowlab/angular_model.hpp"
#include "shadowlab/disk_estimators.hpp"
#include "shadowlab/montecarlo.hpp"

using namespace shadowlab;

namespace {

bool same_bits(const MeanShadowEstimate& a, const MeanShadowEstimate& b) {
  return a.mean.x == b.mean.x && a.mean.y == b.mean.y && a.se_x == b.se_x && a.se_y == b.se_y &&
         a.n_samples == b.n_samples;
}

}  // namespace

TEST_CASE("identical streams replay bit-identically") {
  const PlanePoint mu{0.5, 0.2};
  const auto a = estimate_mean_shadow(mu, 1000, {42, 0});
  const auto b = estimate_mean_shadow(mu, 1000, {42, 0});
  CHECK(same_bits(a, b));
  const auto c = estimate_mean_shadow(mu, 1000, {42, 1});
  CHECK(!same_bits(a, c));
}

TEST_CASE("serial reference and parallel kernels agree bit for bit") {
  const PlanePoint mu{0.3, -0.4};
  const auto serial = estimate_mean_shadow(mu, 300000, {7, 5}, Execution::serial);
  const auto parallel = estimate_mean_shadow(mu, 300000, {7, 5}, Execution::parallel);
  CHECK(same_bits(serial, parallel));

  const auto rs = estimate_shadow_risk(mu, -0.25, 300000, {7, 6}, Execution::serial);
  const auto rp = estimate_shadow_risk(mu, -0.25, 300000, {7, 6}, Execution::parallel);
  CHECK(rs.mean == rp.mean);
  CHECK(rs.std_error == rp.std_error);

  const auto gs = chi_square_gof(mu, 100000, 36, GofSource::geometric, {7, 7}, Execution::serial);
  const auto gp =
      chi_square_gof(mu, 100000, 36, GofSource::geometric, {7, 7}, Execution::parallel);
  CHECK(gs.statistic == gp.statistic);

  const auto vs = gaussian_variance_experiment(10, 1.0, 100000, {7, 8}, Execution::serial);
  const auto vp = gaussian_variance_experiment(10, 1.0, 100000, {7, 8}, Execution::parallel);
  CHECK(vs.mse_s2 == vp.mse_s2);
  CHECK(vs.mse_t2 == vp.mse_t2);
}

#ifdef _OPENMP
TEST_CASE("results do not depend on the thread count") {
  const PlanePoint mu{0.6, 0.0};
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = estimate_mean_shadow(mu, 400000, {11, 0}, Execution::parallel);
  omp_set_num_threads(saved > 1 ? saved : 4);
  const auto many = estimate_mean_shadow(mu, 400000, {11, 0}, Execution::parallel);
  omp_set_num_threads(saved);
  CHECK(same_bits(one, many));
}
#endif

TEST_CASE("mean shadow converges to -mu/2") {
  const auto center = estimate_mean_shadow({0.0, 0.0}, 100000, {1, 0});
  CHECK(std::abs(center.mean.x) <= 4.0 * center.se_x);
  CHECK(std::abs(center.mean.y) <= 4.0 * center.se_y);

  const auto off = estimate_mean_shadow({0.6, 0.0}, 1'000'000, {2, 0});
  CHECK(std::abs(off.mean.x - (-0.3)) <= 4.0 * off.se_x);
  CHECK(std::abs(off.mean.y) <= 4.0 * off.se_y);
  CHECK(off.n_samples == 1'000'000);
}

TEST_CASE("shadow risk matches the closed forms") {
  // |(-2X)|^2 = 4 identically: only rounding noise remains
  const auto unbiased = estimate_shadow_risk({0.0, 0.0}, -2.0, 100000, {3, 0});
  CHECK(std::abs(unbiased.mean - 4.0) <= 1e-12);
  CHECK(unbiased.std_error <= 1e-12);

  const auto bayes = estimate_shadow_risk({0.5, 0.0}, -0.25, 1'000'000, {4, 0});
  CHECK(std::abs(bayes.mean - 0.25) <= 4.0 * bayes.std_error);

  // the c = 0 estimator is the constant origin, so the loss is exactly rho^2
  const auto prior = estimate_shadow_risk({0.5, 0.0}, 0.0, 1000, {5, 0});
  CHECK(prior.mean == 0.25);
  CHECK(prior.std_error == 0.0);
}

TEST_CASE("shadow runs validate their inputs") {
  CHECK_THROWS_AS(estimate_mean_shadow({0.0, 0.0}, 99, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(estimate_mean_shadow({1.2, 0.0}, 1000, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(
      estimate_shadow_risk({0.0, 0.0}, std::numeric_limits<double>::infinity(), 1000, {0, 0}),
      std::domain_error);
}

TEST_CASE("both sampling routes pass the chi-square gate") {
  std::uint64_t stream = 0;
  for (const double rho : {0.0, 0.5, 0.9}) {
    for (const GofSource source : {GofSource::geometric, GofSource::inverse_cdf}) {
      const auto report = chi_square_gof({rho, 0.0}, 100000, 36, source, {123, ++stream});
      CHECK(report.dof == 35);
      CHECK(report.bins == 36);
      CHECK(report.n_samples == 100000);
      CHECK(report.statistic < kChiSquareCrit999Dof35);
    }
  }
}

TEST_CASE("two-bin report is built as specified") {
  const auto report = chi_square_gof({0.0, 0.0}, 100000, 2, GofSource::geometric, {9, 0});
  CHECK(report.dof == 1);
  CHECK(report.bins == 2);
  // under the uniform law both halves expect n/2 counts
  const AngularLaw law(PlanePoint{0.0, 0.0});
  CHECK(100000.0 * (cdf(law, kPi) - cdf(law, 0.0)) == doctest::Approx(50000.0).epsilon(1e-12));
}

TEST_CASE("gof rejects bad configurations") {
  CHECK_THROWS_AS(chi_square_gof({0.0, 0.0}, 100000, 1, GofSource::geometric, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(chi_square_gof({0.0, 0.0}, 1000, 36, GofSource::geometric, {0, 0}),
                  std::invalid_argument);
  // near rho = 1 the thin bin at theta = phi expects fewer than 5 draws
  CHECK_THROWS_AS(chi_square_gof({0.998, 0.0}, 1800, 36, GofSource::geometric, {0, 0}),
                  ConfigError);
}

TEST_CASE("risk curve self-consistency") {
  const double cs[] = {-2.0, -0.25};
  const double rhos[] = {0.0, 0.5, 1.0};
  const auto rows = risk_curve(cs, rhos, 100000, {31, 0});
  REQUIRE(rows.size() == 6);
  // c is the outer loop
  CHECK(rows[0].c == -2.0);
  CHECK(rows[2].rho == 1.0);
  CHECK(rows[3].c == -0.25);
  for (const auto& row : rows) {
    CHECK(row.closed_form == shadow_mse(row.c, row.rho));
    CHECK(std::abs(row.mc_mean - row.closed_form) <=
          std::max(4.0 * row.mc_std_error, 1e-12));
  }
}

TEST_CASE("risk curve rejects empty grids and bad radii") {
  const double cs[] = {-2.0};
  const double rhos[] = {0.5};
  CHECK_THROWS_AS(risk_curve({}, rhos, 1000, {0, 0}), ConfigError);
  CHECK_THROWS_AS(risk_curve(cs, {}, 1000, {0, 0}), ConfigError);
  const double bad_rho[] = {1.5};
  CHECK_THROWS_AS(risk_curve(cs, bad_rho, 1000, {0, 0}), std::domain_error);
}

TEST_CASE("single constant-zero row is exact") {
  const double cs[] = {0.0};
  const double rhos[] = {0.0};
  const auto rows = risk_curve(cs, rhos, 1000, {0, 0});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].mc_mean == 0.0);
  CHECK(rows[0].mc_std_error == 0.0);
}

TEST_CASE("standard errors shrink like 1/sqrt(n)") {
  for (const std::uint64_t seed : {101, 202, 303}) {
    const auto small = estimate_shadow_risk({0.5, 0.0}, -0.25, 100000, {seed, 0});
    const auto large = estimate_shadow_risk({0.5, 0.0}, -0.25, 400000, {seed, 1});
    const double ratio = small.std_error / large.std_error;
    CHECK(ratio >= 1.6);
    CHECK(ratio <= 2.4);
  }
}

TEST_CASE("gaussian experiment validates inputs") {
  CHECK_THROWS_AS(gaussian_variance_experiment(1, 1.0, 1000, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_variance_experiment(10, -1.0, 1000, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(gaussian_variance_experiment(10, 1.0, 99, {0, 0}), std::invalid_argument);
}
