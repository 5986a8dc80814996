#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/causality.hpp"
#include "ardlkit/distributions.hpp"

using namespace ardlkit;

TEST_SUITE("causality") {
  TEST_CASE("F statistic against restricted and unrestricted regressions") {
    const std::size_t T = 80;
    const auto x = testutil::normals(T, 5);
    const auto e = testutil::normals(T, 6);
    std::vector<double> y(T, 0.0);
    for (std::size_t t = 1; t < T; ++t) y[t] = 0.4 * y[t - 1] + 0.3 * x[t - 1] + e[t];
    const int L = 2;
    const auto n = static_cast<Eigen::Index>(T - L);
    Eigen::MatrixXd zu(n, 1 + 2 * L), zr(n, 1 + L);
    Eigen::VectorXd yy(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto t = static_cast<std::size_t>(i + L);
      yy(i) = y[t];
      zu(i, 0) = zr(i, 0) = 1.0;
      for (int l = 1; l <= L; ++l) {
        zu(i, l) = zr(i, l) = y[t - static_cast<std::size_t>(l)];
        zu(i, L + l) = x[t - static_cast<std::size_t>(l)];
      }
    }
    auto rss = [&](const Eigen::MatrixXd& z) {
      return (yy - z * (z.transpose() * z).inverse() * z.transpose() * yy).squaredNorm();
    };
    const double df2 = static_cast<double>(n - 2 * L - 1);
    const double f = ((rss(zr) - rss(zu)) / L) / (rss(zu) / df2);
    const auto r = granger_pair(x, y, L);
    CHECK(r.nobs == static_cast<std::size_t>(n));
    CHECK(r.f_statistic == doctest::Approx(f).epsilon(1e-10));
    CHECK(r.p_value == doctest::Approx(dist::f_upper(f, L, df2)).epsilon(1e-12));
    CHECK(r.reject_5 == (r.p_value < 0.05));
  }

  TEST_CASE("automatic lag choice is symmetric") {
    const auto a = testutil::cumsum(testutil::normals(60, 1));
    const auto b = testutil::normals(60, 2);
    const int l = select_granger_lags(a, b);
    CHECK(l == select_granger_lags(b, a));
    CHECK(l >= 1);
    CHECK(l <= kMaxAutoGrangerLags);
  }

  TEST_CASE("matrix lists both directions for every other variable") {
    const Dataset d = testutil::dataset(
        {{"y", testutil::normals(50, 1)}, {"a", testutil::normals(50, 2)}, {"b", testutil::normals(50, 3)}});
    const auto rows = granger_matrix(d, "y", 1);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].cause == "a");
    CHECK(rows[0].effect == "y");
    CHECK(rows[1].cause == "y");
    CHECK(rows[1].effect == "a");
    CHECK(rows[2].cause == "b");
    CHECK(granger_matrix(testutil::dataset({{"y", testutil::normals(50, 1)}}), "y", 1).empty());
  }

  TEST_CASE("too many lags for the sample") {
    CHECK_THROWS_AS(granger_pair(testutil::normals(12, 1), testutil::normals(12, 2), 6), Error);
  }
}
