#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/linreg.hpp"
#include "ardlkit/rng.hpp"

using namespace ardlkit;

namespace {

DesignMatrix random_design(Eigen::Index n, Eigen::Index k, std::uint64_t seed) {
  Rng rng(seed);
  DesignMatrix d;
  d.x.resize(n, k);
  d.y.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d.x(i, 0) = 1.0;
    for (Eigen::Index j = 1; j < k; ++j) d.x(i, j) = rng.uniform(-2.0, 3.0);
  }
  for (Eigen::Index j = 0; j < k; ++j) d.names.push_back(j == 0 ? "C" : "x" + std::to_string(j));
  for (Eigen::Index i = 0; i < n; ++i) d.y(i) = d.x.row(i).sum() * 0.5 + rng.normal();
  return d;
}

}  // namespace

TEST_SUITE("linreg") {
  TEST_CASE("ols agrees with the normal equations") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const Eigen::Index n = 15 + static_cast<Eigen::Index>(seed % 40);
      const Eigen::Index k = 2 + static_cast<Eigen::Index>(seed % 5);
      const DesignMatrix d = random_design(n, k, seed);
      const RegressionFit fit = ols_fit(d);

      const Eigen::MatrixXd xtx_inv = (d.x.transpose() * d.x).inverse();
      const Eigen::VectorXd b = xtx_inv * d.x.transpose() * d.y;
      const Eigen::VectorXd e = d.y - d.x * b;
      const double rss = e.squaredNorm();
      const double s2 = rss / static_cast<double>(n - k);
      const double tss = (d.y.array() - d.y.mean()).square().sum();
      for (Eigen::Index j = 0; j < k; ++j) {
        CHECK(testutil::rel_diff(fit.coefficients(j), b(j)) < 1e-10);
        CHECK(testutil::rel_diff(fit.standard_errors(j), std::sqrt(s2 * xtx_inv(j, j))) < 1e-10);
      }
      const double nn = static_cast<double>(n);
      CHECK(testutil::rel_diff(fit.rss, rss) < 1e-10);
      CHECK(testutil::rel_diff(fit.r_squared, 1.0 - rss / tss) < 1e-10);
      CHECK(testutil::rel_diff(fit.aic, nn * std::log(rss / nn) + 2.0 * k) < 1e-10);
      CHECK(testutil::rel_diff(fit.bic, nn * std::log(rss / nn) + k * std::log(nn)) < 1e-10);
      CHECK(fit.df_resid == n - k);
    }
  }

  TEST_CASE("residuals are orthogonal to the regressors") {
    const DesignMatrix d = random_design(40, 4, 99);
    const RegressionFit fit = ols_fit(d);
    CHECK((d.x.transpose() * fit.residuals).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(std::abs(fit.residuals.sum()) < 1e-9);
  }

  TEST_CASE("collinear columns are rank deficient") {
    DesignMatrix d = random_design(20, 3, 5);
    d.add_column("dup", d.x.col(1) * 2.0);
    try {
      ols_fit(d);
      FAIL("expected RankDeficient");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::RankDeficient);
    }
  }

  TEST_CASE("too few rows") {
    const DesignMatrix d = random_design(3, 3, 5);
    CHECK_THROWS_AS(ols_fit(d), Error);
  }

  TEST_CASE("information criteria formulas") {
    const auto ic = information_criteria(2.0, 50, 3);
    const double base = 50.0 * std::log(2.0 / 50.0);
    CHECK(ic.aic == doctest::Approx(base + 6.0).epsilon(1e-14));
    CHECK(ic.bic == doctest::Approx(base + 3.0 * std::log(50.0)).epsilon(1e-14));
    CHECK(ic.hq == doctest::Approx(base + 6.0 * std::log(std::log(50.0))).epsilon(1e-14));
    CHECK(ic.get(Criterion::Bic) == ic.bic);
    CHECK_THROWS_AS(information_criteria(0.0, 50, 3), Error);
    CHECK(parse_criterion("BIC") == Criterion::Bic);
    CHECK_FALSE(parse_criterion("sic-x").has_value());
  }

  TEST_CASE("Bartlett long-run variance by hand") {
    const Eigen::VectorXd u = testutil::vec({1.0, -2.0, 0.5, 3.0, -1.0});
    const double n = 5.0;
    const double g0 = u.squaredNorm() / n;
    double g1 = 0.0, g2 = 0.0;
    for (int t = 1; t < 5; ++t) g1 += u(t) * u(t - 1);
    for (int t = 2; t < 5; ++t) g2 += u(t) * u(t - 2);
    g1 /= n;
    g2 /= n;
    const auto lrv = long_run_variance(u, 2);
    CHECK(lrv.bandwidth == 2);
    CHECK(lrv.gamma0(0, 0) == doctest::Approx(g0).epsilon(1e-14));
    const double w1 = 1.0 - 1.0 / 3.0, w2 = 1.0 - 2.0 / 3.0;
    CHECK(lrv.omega(0, 0) == doctest::Approx(g0 + 2.0 * (w1 * g1 + w2 * g2)).epsilon(1e-14));
    CHECK(lrv.lambda_one_sided(0, 0) == doctest::Approx(g0 + w1 * g1 + w2 * g2).epsilon(1e-14));
    CHECK(long_run_variance(u, 0).omega(0, 0) == doctest::Approx(g0));
  }

  TEST_CASE("long-run covariance matrix is symmetric") {
    Eigen::MatrixXd u(60, 3);
    const auto z = testutil::normals(180, 3);
    for (int i = 0; i < 60; ++i)
      for (int j = 0; j < 3; ++j) u(i, j) = z[static_cast<std::size_t>(3 * i + j)];
    const auto lrv = long_run_variance(u);
    CHECK((lrv.omega - lrv.omega.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(lrv.bandwidth == automatic_bandwidth(60));
  }

  TEST_CASE("automatic bandwidth rule") {
    CHECK(automatic_bandwidth(100) == 4);
    CHECK(automatic_bandwidth(32) == static_cast<int>(std::floor(4.0 * std::pow(0.32, 2.0 / 9.0))));
  }
}
