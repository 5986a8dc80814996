#include <cmath>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/experiments.hpp"
#include "ardlkit/montecarlo.hpp"

using namespace ardlkit;

namespace {

DgpSpec make(Process p, std::size_t length, std::uint64_t seed, double sigma = 1.0) {
  DgpSpec s;
  s.process = p;
  s.length = length;
  s.seed = seed;
  s.sigma = sigma;
  return s;
}

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace

TEST_SUITE("montecarlo") {
  TEST_CASE("same spec and seed give bit-identical series") {
    for (Process p : std::vector<Process>{dgp::WhiteNoise{2}, dgp::Ar1{0.7}, dgp::RandomWalk{0.1, 2},
                                          dgp::DoubleIntegrated{}, dgp::TriangularCoint{2.0, 0.5, 2},
                                          dgp::ErrorCorrection{}, dgp::VarCausal{}, dgp::Break{}, dgp::Hetero{}}) {
      const auto a = simulate_dgp(make(p, 60, 9));
      const auto b = simulate_dgp(make(p, 60, 9));
      CHECK(to_csv(a) == to_csv(b));
      CHECK(a.length() == 60);
      CHECK(a.variables().front().name() == "y");
      CHECK(to_csv(a) != to_csv(simulate_dgp(make(p, 60, 10))));
    }
  }

  TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(simulate_dgp(make(dgp::WhiteNoise{}, 10, 1)), Error);
    CHECK_THROWS_AS(simulate_dgp(make(dgp::WhiteNoise{}, 100, 1, 0.0)), Error);
    CHECK_THROWS_AS(simulate_dgp(make(dgp::Ar1{1.5}, 100, 1)), Error);
    CHECK_THROWS_AS(simulate_dgp(make(dgp::Ar1{-1.0}, 100, 1)), Error);
    CHECK_THROWS_AS(resolve_test("kpss"), Error);
  }

  TEST_CASE("AR(1) with rho = 0 has negligible lag-one autocorrelation") {
    const auto y = simulate_dgp(make(dgp::Ar1{0.0}, 10000, 3)).get("y").values();
    const double m = mean(y);
    double num = 0.0, den = 0.0;
    for (std::size_t t = 0; t < y.size(); ++t) {
      den += (y[t] - m) * (y[t] - m);
      if (t > 0) num += (y[t] - m) * (y[t - 1] - m);
    }
    CHECK(std::abs(num / den) < 3.0 / std::sqrt(10000.0));
  }

  TEST_CASE("sample moments converge to their analytic values") {
    const std::size_t T = 10000;
    const double se_mean = 1.0 / std::sqrt(static_cast<double>(T));
    const double se_var = std::sqrt(2.0 / static_cast<double>(T));

    const auto wn = simulate_dgp(make(dgp::WhiteNoise{}, T, 4, 2.0)).get("y").values();
    CHECK(std::abs(mean(wn)) < 5.0 * 2.0 * se_mean);
    CHECK(std::abs(variance(wn) / 4.0 - 1.0) < 5.0 * se_var);

    const auto ar = simulate_dgp(make(dgp::Ar1{0.5}, T, 5)).get("y").values();
    CHECK(std::abs(variance(ar) - 1.0 / 0.75) < 5.0 * se_var * (1.0 / 0.75) * std::sqrt((1 + 0.25) / (1 - 0.25)));

    const auto rw = simulate_dgp(make(dgp::RandomWalk{0.3}, T, 6)).get("y").values();
    std::vector<double> d(rw.size() - 1);
    for (std::size_t t = 1; t < rw.size(); ++t) d[t - 1] = rw[t] - rw[t - 1];
    CHECK(std::abs(mean(d) - 0.3) < 5.0 * se_mean);
    CHECK(std::abs(variance(d) - 1.0) < 5.0 * se_var);

    const auto h = simulate_dgp(make(dgp::Hetero{0.0}, T, 7));
    const auto& x = h.get("x").values();
    CHECK(std::abs(mean(x) - 2.5) < 5.0 * std::sqrt(0.75) * se_mean);
    CHECK(*std::min_element(x.begin(), x.end()) >= 1.0);
    CHECK(*std::max_element(x.begin(), x.end()) < 4.0);
  }

  TEST_CASE("triangular DGP correlation between u and v") {
    const auto d = simulate_dgp(make(dgp::TriangularCoint{2.0, 0.7, 1}, 10000, 8));
    const auto& y = d.get("y").values();
    const auto& x = d.get("x").values();
    std::vector<double> u(y.size() - 1), v(y.size() - 1);
    for (std::size_t t = 1; t < y.size(); ++t) {
      u[t - 1] = y[t] - 2.0 * x[t];
      v[t - 1] = x[t] - x[t - 1];
    }
    const double mu = mean(u), mv = mean(v);
    double suv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) suv += (u[i] - mu) * (v[i] - mv);
    const double corr = suv / static_cast<double>(u.size() - 1) / std::sqrt(variance(u) * variance(v));
    CHECK(std::abs(corr - 0.7) < 5.0 * (1.0 - 0.49) / std::sqrt(10000.0));
  }

  TEST_CASE("experiments are independent of the execution mode") {
    const auto spec = make(dgp::RandomWalk{}, 100, 11);
    const auto serial = size_power_experiment(spec, resolve_test("adf"), 200, 0.05, Execution::Serial);
    const auto parallel = size_power_experiment(spec, resolve_test("adf"), 200, 0.05, Execution::Parallel);
    CHECK(serial.values == parallel.values);
    CHECK(serial.replications == 200);
    const double rate = serial.value("rejection_rate");
    CHECK(rate >= 0.0);
    CHECK(rate <= 1.0);
    CHECK_THROWS_AS(size_power_experiment(spec, resolve_test("adf"), 50), Error);
  }

  TEST_CASE("type 7 quantile") {
    std::vector<double> v{5, 1, 4, 2, 3};
    CHECK(sample_quantile(v, 0.0) == 1.0);
    CHECK(sample_quantile(v, 1.0) == 5.0);
    CHECK(sample_quantile(v, 0.5) == 3.0);
    CHECK(sample_quantile(v, 0.1) == doctest::Approx(1.4));
    std::vector<double> empty;
    CHECK_THROWS_AS(sample_quantile(empty, 0.5), Error);
  }

  TEST_CASE("simulated critical values are ordered and close to the table") {
    const UnitRootSpec adf{UnitRootTest::Adf, Deterministics::Constant, LagPolicy::fixed(0)};
    const auto cv = simulate_critical_values(adf, 100, 20000, 5);
    CHECK(cv.pct1 < cv.pct5);
    CHECK(cv.pct5 < cv.pct10);
    CHECK(std::abs(cv.pct5 - unit_root_critical_values(UnitRootTest::Adf, Deterministics::Constant, 100).pct5) < 0.06);
    CHECK_THROWS_AS(simulate_critical_values(adf, 100, 5000, 5), Error);
  }

  TEST_CASE("experiment registry") {
    CHECK_FALSE(experiments().empty());
    CHECK(find_experiment("adf-size").default_reps >= 100);
    CHECK_THROWS_AS(find_experiment("nope"), Error);
    const auto a = run_experiment("granger-power", 100, 3);
    const auto b = run_experiment("granger-power", 100, 3, Execution::Serial);
    CHECK(a.values == b.values);
    CHECK(a.seed == 3);
  }
}

TEST_SUITE("montecarlo-dispersion") {
  // Seed-to-seed variance of the simulated 5% quantile should halve when the
  // replication count doubles.
  TEST_CASE("square-root law for the simulated 5% quantile") {
    const UnitRootSpec adf{UnitRootTest::Adf, Deterministics::Constant, LagPolicy::fixed(0)};
    const int seeds = 60;
    std::vector<double> small, large;
    for (int s = 0; s < seeds; ++s) {
      small.push_back(simulate_critical_values(adf, 20, 10000, 1000 + static_cast<std::uint64_t>(s)).pct5);
      large.push_back(simulate_critical_values(adf, 20, 20000, 5000 + static_cast<std::uint64_t>(s)).pct5);
    }
    const double ratio = variance(large) / variance(small);
    MESSAGE("variance ratio " << ratio);
    CHECK(ratio > 0.5 * 0.7);
    CHECK(ratio < 0.5 * 1.3);
  }
}
