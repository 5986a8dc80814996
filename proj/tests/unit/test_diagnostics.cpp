#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "durbin_exact.hpp"

#include "ardlkit/diagnostics.hpp"
#include "ardlkit/distributions.hpp"
#include "ardlkit/linreg.hpp"

using namespace ardlkit;

namespace {

DesignMatrix trend_design(std::size_t n, std::uint64_t seed, double noise = 1.0) {
  const auto e = testutil::normals(n, seed);
  const auto z = testutil::normals(n, seed + 1);
  DesignMatrix d;
  d.x.resize(static_cast<Eigen::Index>(n), 3);
  d.y.resize(static_cast<Eigen::Index>(n));
  for (std::size_t t = 0; t < n; ++t) {
    const auto i = static_cast<Eigen::Index>(t);
    d.x.row(i) << 1.0, static_cast<double>(t), z[t];
    d.y(i) = 1.0 + 0.1 * static_cast<double>(t) + 0.5 * z[t] + noise * e[t];
  }
  d.names = {"C", "t", "z"};
  return d;
}

double r_squared(const Eigen::MatrixXd& z, const Eigen::VectorXd& y) {
  const Eigen::VectorXd e = y - z * (z.transpose() * z).inverse() * z.transpose() * y;
  return 1.0 - e.squaredNorm() / (y.array() - y.mean()).square().sum();
}

}  // namespace

TEST_SUITE("diagnostics") {
  TEST_CASE("Jarque-Bera from the moment formula") {
    const auto e = testutil::normals(64, 4);
    double mean = 0.0;
    for (double v : e) mean += v;
    mean /= 64.0;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : e) {
      m2 += std::pow(v - mean, 2) / 64.0;
      m3 += std::pow(v - mean, 3) / 64.0;
      m4 += std::pow(v - mean, 4) / 64.0;
    }
    const double s = m3 / std::pow(m2, 1.5), k = m4 / (m2 * m2);
    const double jb = 64.0 / 6.0 * (s * s + (k - 3.0) * (k - 3.0) / 4.0);
    const auto r = jarque_bera(e);
    CHECK(r.statistic == doctest::Approx(jb).epsilon(1e-12));
    CHECK(r.p_value == doctest::Approx(std::exp(-jb / 2.0)).epsilon(1e-12));
    CHECK(r.df == 2);
  }

  TEST_CASE("Jarque-Bera is exactly zero with zero skewness and kurtosis three") {
    std::vector<double> v;
    for (int r = 0; r < 3; ++r) v.insert(v.end(), {-2.0, 2.0, 0.0, 0.0, 0.0, 0.0});
    CHECK(jarque_bera(v).statistic == 0.0);
    CHECK(jarque_bera(v).p_value == 1.0);
    CHECK_THROWS_AS(jarque_bera(std::vector<double>(20, 1.0)), Error);
  }

  TEST_CASE("Breusch-Godfrey LM against the auxiliary regression") {
    const DesignMatrix d = trend_design(60, 8);
    const auto fit = ols_fit(d);
    const int order = 2;
    const Eigen::Index n = d.rows();
    Eigen::MatrixXd z(n, d.cols() + order);
    z.leftCols(d.cols()) = d.x;
    for (int l = 1; l <= order; ++l)
      for (Eigen::Index t = 0; t < n; ++t) z(t, d.cols() + l - 1) = t >= l ? fit.residuals(t - l) : 0.0;
    const double lm = static_cast<double>(n) * r_squared(z, fit.residuals);
    const auto r = serial_correlation_lm(fit, d, order);
    CHECK(r.statistic == doctest::Approx(lm).epsilon(1e-10));
    CHECK(r.df == 2);
    CHECK(r.p_value == doctest::Approx(dist::chi2_upper(lm, 2.0)).epsilon(1e-12));
  }

  TEST_CASE("Breusch-Pagan-Godfrey against the auxiliary regression") {
    const DesignMatrix d = trend_design(60, 9);
    const auto fit = ols_fit(d);
    const Eigen::VectorXd e2 = fit.residuals.array().square();
    const double bp = 60.0 * r_squared(d.x, e2);
    const auto r = heteroscedasticity_bpg(fit, d);
    CHECK(r.statistic == doctest::Approx(bp).epsilon(1e-10));
    CHECK(r.df == 2);
  }

  TEST_CASE("recursive residuals from expanding-window fits") {
    const DesignMatrix d = trend_design(30, 10);
    const auto w = recursive_residuals(d);
    const Eigen::Index k = d.cols();
    REQUIRE(w.size() == static_cast<std::size_t>(d.rows() - k));
    for (Eigen::Index t = k; t < d.rows(); ++t) {
      const Eigen::MatrixXd x = d.x.topRows(t);
      const Eigen::MatrixXd xtx_inv = (x.transpose() * x).inverse();
      const Eigen::VectorXd b = xtx_inv * x.transpose() * d.y.head(t);
      const Eigen::VectorXd xt = d.x.row(t).transpose();
      const double expected = (d.y(t) - xt.dot(b)) / std::sqrt(1.0 + xt.dot(xtx_inv * xt));
      CHECK(w[static_cast<std::size_t>(t - k)] == doctest::Approx(expected).epsilon(1e-9));
    }
    const double rss = ols_fit(d).rss;
    double ss = 0.0;
    for (double v : w) ss += v * v;
    CHECK(ss == doctest::Approx(rss).epsilon(1e-9));
  }

  TEST_CASE("CUSUM lines and CUSUMSQ endpoint") {
    const auto w = testutil::normals(40, 11);
    const auto cusum = cusum_paths(w, 3, StabilityKind::Cusum);
    REQUIRE(cusum.path.size() == 40);
    CHECK(cusum.start_index == 4);
    const double root = std::sqrt(40.0);
    CHECK(cusum.upper_bound.front() == doctest::Approx(0.948 * (root + 2.0 / root)));
    CHECK(cusum.upper_bound.back() == doctest::Approx(0.948 * (root + 2.0 * 40.0 / root)));
    CHECK(cusum.lower_bound.back() == doctest::Approx(-cusum.upper_bound.back()));

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto sq = cusum_paths(testutil::normals(10 + seed * 7, seed), 2, StabilityKind::Cusumsq);
      CHECK(sq.path.back() == 1.0);
      for (std::size_t i = 1; i < sq.path.size(); ++i) CHECK(sq.path[i] >= sq.path[i - 1]);
    }
  }

  TEST_CASE("zero recursive residuals give a flat stable CUSUM") {
    const auto p = cusum_paths(std::vector<double>(25, 0.0), 2, StabilityKind::Cusum);
    CHECK(p.stable);
    for (double v : p.path) CHECK(v == 0.0);
  }

  TEST_CASE("a level shift makes CUSUMSQ unstable") {
    std::vector<double> w = testutil::normals(60, 12);
    for (std::size_t i = 30; i < 60; ++i) w[i] *= 6.0;
    CHECK_FALSE(cusum_paths(w, 2, StabilityKind::Cusumsq).stable);
  }

  TEST_CASE("embedded c0 table equals the exact computation") {
    for (int np = 1; np <= 100; ++np) {
      const double exact = std::round(durbin::critical_value(np, 0.025) * 1e5) / 1e5;
      CHECK(cusumsq_c0(np).c0 == doctest::Approx(exact).epsilon(1e-12));
      CHECK_FALSE(cusumsq_c0(np).extrapolated);
    }
    CHECK(cusumsq_c0(10).c0 == doctest::Approx(0.34022));
    CHECK(cusumsq_c0(250).extrapolated);
  }
}
