#include "shadowlab/cli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shadowlab/angular_model.hpp"
#include "shadowlab/classic_counterexamples.hpp"
#include "shadowlab/disk_estimators.hpp"
#include "shadowlab/geometry.hpp"
#include "shadowlab/montecarlo.hpp"
#include "shadowlab/table.hpp"

namespace shadowlab::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_double_list(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto r = std::from_chars(begin, end, v);
    if (r.ec != std::errc{} || r.ptr != end)
      throw UsageError(flag + ": '" + token + "' is not a number");
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

struct CommonOpts {
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_samples = true) {
  cmd->add_option("--seed", o.seed, "random seed; identical seeds reproduce identical bytes")
      ->capture_default_str();
  if (with_samples)
    cmd->add_option("--samples", o.samples, "Monte Carlo draw count")->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

struct MuOpts {
  std::string cartesian;
  std::string polar;
  CLI::Option* cart_opt = nullptr;
  CLI::Option* polar_opt = nullptr;
};

void add_mu(CLI::App* cmd, MuOpts& o) {
  o.cart_opt = cmd->add_option("--mu", o.cartesian, "light source as Cartesian x,y");
  o.polar_opt = cmd->add_option("--mu-polar", o.polar, "light source as polar rho,phi");
  o.cart_opt->excludes(o.polar_opt);
}

// Canonical internal form is Cartesian.
PlanePoint resolve_mu(const MuOpts& o) {
  const bool has_cart = o.cart_opt->count() > 0;
  const bool has_polar = o.polar_opt->count() > 0;
  if (has_cart == has_polar)
    throw UsageError("mu: exactly one of --mu or --mu-polar is required");
  if (has_cart) {
    const auto v = parse_double_list(o.cartesian, "--mu");
    if (v.size() != 2) throw UsageError("--mu: expected two comma-separated numbers x,y");
    const PlanePoint p{v[0], v[1]};
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !inside_closed_disk(p))
      throw UsageError("mu: point must lie in the closed unit disk");
    return p;
  }
  const auto v = parse_double_list(o.polar, "--mu-polar");
  if (v.size() != 2)
    throw UsageError("--mu-polar: expected two comma-separated numbers rho,phi");
  if (!(v[0] >= 0.0 && v[0] <= 1.0)) throw UsageError("mu-polar: require 0 <= rho <= 1");
  if (!std::isfinite(v[1])) throw UsageError("mu-polar: phi must be finite");
  return polar_to_cartesian({v[0], v[1]});
}

struct Rendered {
  Table table;
  JsonShape shape = JsonShape::object;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Estimator experiments on the disk shadow model, with the classic Poisson and "
               "Gaussian warm-ups"};
  app.name("shadowlab");
  app.require_subcommand(1);

  CommonOpts mean_common;
  MuOpts mean_mu;
  auto* cmd_mean = app.add_subcommand(
      "shadow-mean", "empirical mean of the boundary shadow point (converges to -mu/2)");
  add_mu(cmd_mean, mean_mu);
  add_common(cmd_mean, mean_common);

  CommonOpts risk_common;
  MuOpts risk_mu;
  double risk_c = 0.0;
  auto* cmd_risk = app.add_subcommand(
      "shadow-risk", "Monte Carlo mean squared error of the estimator c*X at a fixed source");
  add_mu(cmd_risk, risk_mu);
  cmd_risk->add_option("--c", risk_c, "estimator coefficient")->required();
  add_common(cmd_risk, risk_common);

  CommonOpts curve_common;
  std::string curve_c_list;
  std::string curve_rho_list;
  auto* cmd_curve = app.add_subcommand(
      "risk-curve", "Monte Carlo vs closed-form risk over a (c, rho) grid, phi = 0");
  cmd_curve->add_option("--c-list", curve_c_list, "comma-separated c grid")->required();
  cmd_curve->add_option("--rho-list", curve_rho_list, "comma-separated rho grid")->required();
  add_common(cmd_curve, curve_common);

  CommonOpts deval_common;
  MuOpts deval_mu;
  std::string deval_thetas;
  auto* cmd_deval = app.add_subcommand(
      "density-eval", "closed-form density and CDF of the shadow angle at given angles");
  add_mu(cmd_deval, deval_mu);
  cmd_deval->add_option("--theta", deval_thetas, "comma-separated angles in [0, 2*pi]")
      ->required();
  add_common(cmd_deval, deval_common, /*with_samples=*/false);

  CommonOpts gof_common;
  MuOpts gof_mu;
  int gof_bins = 36;
  std::string gof_source = "geometric";
  auto* cmd_gof = app.add_subcommand(
      "density-gof", "chi-square goodness of fit of simulated shadows against the closed form");
  add_mu(cmd_gof, gof_mu);
  cmd_gof->add_option("--bins", gof_bins, "equal-width angle bins")->capture_default_str();
  cmd_gof->add_option("--source", gof_source, "sampling route")
      ->check(CLI::IsMember({"geometric", "inverse_cdf"}))
      ->capture_default_str();
  add_common(cmd_gof, gof_common);

  CommonOpts post_common;
  double post_theta = 0.0;
  int post_panels = 512;
  auto* cmd_post = app.add_subcommand(
      "posterior-mean", "posterior mean of the source by 2-D quadrature (converges to -X/4)");
  cmd_post->add_option("--theta", post_theta, "observed shadow angle")->required();
  cmd_post->add_option("--panels", post_panels, "Simpson subintervals per axis")
      ->capture_default_str();
  add_common(cmd_post, post_common, /*with_samples=*/false);

  CommonOpts bopt_common;
  double bopt_lo = -1.0;
  double bopt_hi = 0.0;
  double bopt_step = 1e-3;
  auto* cmd_bopt =
      app.add_subcommand("bayes-opt", "grid minimization of the Bayes risk of c*X");
  cmd_bopt->add_option("--c-lo", bopt_lo, "grid start")->capture_default_str();
  cmd_bopt->add_option("--c-hi", bopt_hi, "grid end")->capture_default_str();
  cmd_bopt->add_option("--step", bopt_step, "grid step")->capture_default_str();
  add_common(cmd_bopt, bopt_common, /*with_samples=*/false);

  CommonOpts pois_common;
  std::int64_t pois_x = 0;
  std::optional<double> pois_lambda;
  auto* cmd_pois = app.add_subcommand(
      "poisson-demo", "unbiased (-1)^x vs maximum-likelihood e^(-2x) for the Poisson target");
  cmd_pois->add_option("--x", pois_x, "observed count")->required();
  cmd_pois->add_option("--lambda", pois_lambda,
                       "rate; adds the exact MSEs of both estimators to the output");
  add_common(cmd_pois, pois_common, /*with_samples=*/false);

  CommonOpts gauss_common;
  int gauss_n = 10;
  double gauss_sigma2 = 1.0;
  auto* cmd_gauss = app.add_subcommand(
      "gaussian-demo", "replicated S^2 vs T^2 variance-estimator experiment");
  cmd_gauss->add_option("--n", gauss_n, "observations per replication")->capture_default_str();
  cmd_gauss->add_option("--sigma2", gauss_sigma2, "true variance")->capture_default_str();
  add_common(cmd_gauss, gauss_common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    Rendered result;
    const CommonOpts* common = nullptr;

    if (cmd_mean->parsed()) {
      common = &mean_common;
      const auto est = estimate_mean_shadow(resolve_mu(mean_mu), mean_common.samples,
                                            {mean_common.seed, 0});
      result.table = {{"mean_x", "mean_y", "se_x", "se_y", "n"},
                      {{est.mean.x, est.mean.y, est.se_x, est.se_y, est.n_samples}}};
    } else if (cmd_risk->parsed()) {
      common = &risk_common;
      const auto est = estimate_shadow_risk(resolve_mu(risk_mu), risk_c, risk_common.samples,
                                            {risk_common.seed, 0});
      result.table = {{"mean", "std_error", "n"}, {{est.mean, est.std_error, est.n_samples}}};
    } else if (cmd_curve->parsed()) {
      common = &curve_common;
      const auto cs = parse_double_list(curve_c_list, "--c-list");
      const auto rhos = parse_double_list(curve_rho_list, "--rho-list");
      const auto rows =
          risk_curve(cs, rhos, curve_common.samples, {curve_common.seed, 0});
      result.table.columns = {"c", "rho", "mc_mean", "mc_std_error", "closed_form"};
      for (const auto& r : rows)
        result.table.rows.push_back({r.c, r.rho, r.mc_mean, r.mc_std_error, r.closed_form});
      result.shape = JsonShape::array;
    } else if (cmd_deval->parsed()) {
      common = &deval_common;
      const AngularLaw law(resolve_mu(deval_mu));
      result.table.columns = {"theta", "density", "cdf"};
      for (const double theta : parse_double_list(deval_thetas, "--theta")) {
        if (!(theta >= 0.0 && theta <= kTwoPi))
          throw UsageError("theta: require 0 <= theta <= 2*pi");
        result.table.rows.push_back({theta, density(law, theta), cdf(law, theta)});
      }
      result.shape = JsonShape::array;
    } else if (cmd_gof->parsed()) {
      common = &gof_common;
      const auto source =
          gof_source == "geometric" ? GofSource::geometric : GofSource::inverse_cdf;
      const auto report = chi_square_gof(resolve_mu(gof_mu), gof_common.samples, gof_bins,
                                         source, {gof_common.seed, 0});
      result.table = {{"statistic", "dof", "bins", "n"},
                      {{report.statistic, static_cast<std::int64_t>(report.dof),
                        static_cast<std::int64_t>(report.bins), report.n_samples}}};
    } else if (cmd_post->parsed()) {
      common = &post_common;
      if (!std::isfinite(post_theta)) throw UsageError("theta: must be finite");
      const PlanePoint mean = posterior_mean_numeric({post_theta}, post_panels);
      result.table = {{"theta", "panels", "mean_x", "mean_y"},
                      {{post_theta, static_cast<std::int64_t>(post_panels), mean.x, mean.y}}};
    } else if (cmd_bopt->parsed()) {
      common = &bopt_common;
      const auto min = minimize_bayes_risk(bopt_lo, bopt_hi, bopt_step);
      result.table = {{"c_star", "risk"}, {{min.c_star, min.risk}}};
    } else if (cmd_pois->parsed()) {
      common = &pois_common;
      result.table.columns = {"x", "unbiased_estimate", "mle_estimate"};
      std::vector<CellValue> row{pois_x, unbiased_delta(pois_x), mle_estimate(pois_x)};
      if (pois_lambda) {
        const PoissonModel model{*pois_lambda};
        result.table.columns.insert(result.table.columns.end(),
                                    {"lambda", "target", "mse_unbiased", "mse_mle"});
        row.push_back(model.lambda);
        row.push_back(std::exp(-2.0 * model.lambda));
        row.push_back(poisson_estimator_mse(PoissonEstimatorKind::unbiased, model.lambda));
        row.push_back(poisson_estimator_mse(PoissonEstimatorKind::mle, model.lambda));
      }
      result.table.rows.push_back(std::move(row));
    } else if (cmd_gauss->parsed()) {
      common = &gauss_common;
      const auto rep = gaussian_variance_experiment(gauss_n, gauss_sigma2,
                                                    gauss_common.samples, {gauss_common.seed, 0});
      const auto exact = variance_estimator_mse(gauss_n, gauss_sigma2);
      result.table = {{"n", "sigma2", "replications", "mean_s2", "se_s2", "mean_t2", "se_t2",
                       "mse_s2", "mse_s2_se", "mse_t2", "mse_t2_se", "exact_mse_s2",
                       "exact_mse_t2"},
                      {{static_cast<std::int64_t>(gauss_n), gauss_sigma2, rep.n_replications,
                        rep.mean_s2, rep.se_s2, rep.mean_t2, rep.se_t2, rep.mse_s2,
                        rep.mse_s2_se, rep.mse_t2, rep.mse_t2_se, exact.mse_s, exact.mse_t}}};
    }

    const auto format = common->format == "csv" ? OutputFormat::csv : OutputFormat::json;
    out << render_table(result.table, format, result.shape);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace shadowlab::cli
