#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/coint.hpp"
#include "ardlkit/montecarlo.hpp"

using namespace ardlkit;

namespace {

// Residual of `target` after projecting on the columns of `z`.
Eigen::VectorXd project_out(const Eigen::MatrixXd& z, const Eigen::VectorXd& target) {
  return target - z * (z.transpose() * z).ldlt().solve(z.transpose() * target);
}

}  // namespace

TEST_SUITE("coint") {
  TEST_CASE("DOLS design built by hand") {
    const std::vector<double> x{1, 3, 2, 6, 5, 9, 4, 8};
    const std::vector<double> y{0, 1, 2, 3, 4, 5, 6, 7};
    const Dataset d = testutil::dataset({{"y", y}, {"x", x}});
    const auto des = build_dols_design(d, ModelSpec{"y", {"x"}}, 1);
    // rows t = 2..6, columns C, x, dx_{t-1}, dx_t, dx_{t+1}
    Eigen::MatrixXd expected(5, 5);
    for (int r = 0; r < 5; ++r) {
      const int t = r + 2;
      expected.row(r) << 1.0, x[t], x[t - 1] - x[t - 2], x[t] - x[t - 1], x[t + 1] - x[t];
    }
    CHECK(des.x == expected);
    CHECK(des.y == testutil::vec({2, 3, 4, 5, 6}));
    CHECK(des.names == std::vector<std::string>{"C", "x", "D(x(-1))", "D(x)", "D(x(+1))"});
    CHECK_THROWS_AS(build_dols_design(d, ModelSpec{"y", {"x"}}, 4), Error);
  }

  TEST_CASE("FMOLS reduces to OLS when u is orthogonal to every kernel-weighted dx") {
    const std::size_t T = 120;
    const int B = 3;
    const auto x = testutil::cumsum(testutil::normals(T, 31));
    const Eigen::Index n = static_cast<Eigen::Index>(T - 1);
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, 2 + 2 * B + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto t = static_cast<std::size_t>(i + 1);
      z(i, 0) = 1.0;
      z(i, 1) = x[t];
    }
    Eigen::VectorXd dx(n);
    for (Eigen::Index i = 0; i < n; ++i) dx(i) = x[static_cast<std::size_t>(i + 1)] - x[static_cast<std::size_t>(i)];
    for (int s = -B; s <= B; ++s) {
      for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index j = i + s;
        z(i, 2 + s + B) = (j >= 0 && j < n) ? dx(j) : 0.0;
      }
    }
    const Eigen::VectorXd u = project_out(z, testutil::vec(testutil::normals(static_cast<std::size_t>(n), 32)));
    std::vector<double> y(T, 0.0);
    for (Eigen::Index i = 0; i < n; ++i) y[static_cast<std::size_t>(i + 1)] = 0.7 + 1.5 * x[static_cast<std::size_t>(i + 1)] + u(i);

    const Dataset d = testutil::dataset({{"y", y}, {"x", x}});
    CointTuning tuning;
    tuning.bandwidth = B;
    const auto fm = coint_fit(d, ModelSpec{"y", {"x"}}, CointMethod::Fmols, tuning);
    CHECK(fm.effective_sample == n);
    CHECK(std::abs(fm.coef("C") - 0.7) < 1e-10);
    CHECK(std::abs(fm.coef("x") - 1.5) < 1e-10);
  }

  TEST_CASE("all three estimators recover an exogenous cointegrating slope") {
    DgpSpec spec;
    spec.process = dgp::TriangularCoint{2.0, 0.0, 1};
    spec.length = 400;
    spec.seed = 77;
    const Dataset d = simulate_dgp(spec);
    for (auto m : {CointMethod::Fmols, CointMethod::Dols, CointMethod::Ccr}) {
      const auto fit = coint_fit(d, ModelSpec{"y", {"x"}}, m);
      CHECK(fit.names.front() == "C");
      CHECK(std::abs(fit.coef("x") - 2.0) < 4.0 * fit.se("x"));
      CHECK(fit.se("x") > 0.0);
    }
  }

  TEST_CASE("rejections") {
    const Dataset d = testutil::dataset({{"y", testutil::normals(15, 1)}, {"x", testutil::normals(15, 2)}});
    CHECK_THROWS_AS(coint_fit(d, ModelSpec{"y", {"x"}}, CointMethod::Fmols), Error);
    const Dataset ok = testutil::dataset({{"y", testutil::normals(60, 1)}, {"x", testutil::cumsum(testutil::normals(60, 2))}});
    ModelSpec trend{"y", {"x"}};
    trend.trend = true;
    CHECK_THROWS_AS(coint_fit(ok, trend, CointMethod::Dols), Error);
    CHECK(parse_coint_method("dols") == CointMethod::Dols);
  }
}
