#include "ardlkit/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "ardlkit/ardl.hpp"
#include "ardlkit/causality.hpp"
#include "ardlkit/coint.hpp"

namespace ardlkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  return sample_quantile(v, 0.5);
}

double share(const std::vector<int>& flags) {
  if (flags.empty()) return 0.0;
  std::size_t hits = 0;
  for (int f : flags) hits += static_cast<std::size_t>(f != 0);
  return static_cast<double>(hits) / static_cast<double>(flags.size());
}

SimReport base_report(std::string name, std::string metric, std::size_t reps, std::uint64_t seed) {
  SimReport r;
  r.experiment = std::move(name);
  r.metric = std::move(metric);
  r.replications = reps;
  r.seed = seed;
  return r;
}

DgpSpec make_spec(Process p, std::size_t length, std::uint64_t seed) {
  DgpSpec s;
  s.process = p;
  s.length = length;
  s.seed = seed;
  return s;
}

Experiment rejection(std::string name, std::string description, std::string test, Process process,
                     std::size_t length, std::size_t reps) {
  Experiment e;
  e.name = name;
  e.description = std::move(description);
  e.default_reps = reps;
  e.run = [name, test, process, length](std::size_t r, std::uint64_t seed, Execution exec) {
    auto report = size_power_experiment(make_spec(process, length, seed), resolve_test(test), r, 0.05, exec);
    report.experiment = name;
    return report;
  };
  return e;
}

Eigen::VectorXd column(const Dataset& d, const std::string& name) {
  const auto& v = d.get(name).values();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<Experiment> build_registry() {
  std::vector<Experiment> out;
  out.push_back(rejection("adf-size", "ADF rejection rate under a driftless random walk, T=200", "adf",
                          dgp::RandomWalk{}, 200, 5000));
  out.push_back(rejection("pp-size", "PP rejection rate under a driftless random walk, T=200", "pp",
                          dgp::RandomWalk{}, 200, 5000));
  out.push_back(rejection("dfgls-size", "DF-GLS rejection rate under a driftless random walk, T=200", "dfgls",
                          dgp::RandomWalk{}, 200, 5000));
  out.push_back(rejection("adf-power", "ADF rejection rate under white noise, T=200", "adf", dgp::WhiteNoise{},
                          200, 5000));
  out.push_back(rejection("pp-power", "PP rejection rate under white noise, T=200", "pp", dgp::WhiteNoise{}, 200,
                          5000));
  out.push_back(rejection("dfgls-power", "DF-GLS rejection rate under white noise, T=200", "dfgls",
                          dgp::WhiteNoise{}, 200, 5000));
  out.push_back(rejection("adf-power-ar95", "ADF rejection rate under AR(1) rho=0.95, T=100", "adf",
                          dgp::Ar1{0.95}, 100, 2000));
  out.push_back(rejection("dfgls-power-ar95", "DF-GLS rejection rate under AR(1) rho=0.95, T=100", "dfgls",
                          dgp::Ar1{0.95}, 100, 2000));
  out.push_back(rejection("bounds-size", "Bounds test (5% upper bound) under independent random walks, k=1, T=100",
                          "bounds", dgp::RandomWalk{0.0, 2}, 100, 2000));
  out.push_back(rejection("bounds-power", "Bounds test (5% upper bound) under the error-correction DGP, T=200",
                          "bounds", dgp::ErrorCorrection{}, 200, 2000));
  out.push_back(rejection("granger-size", "Granger x -> y under a VAR with b=0, T=200", "granger",
                          dgp::VarCausal{0.5, 0.0}, 200, 5000));
  out.push_back(rejection("granger-power", "Granger x -> y under a VAR with a=0.8, b=0.5, T=200", "granger",
                          dgp::VarCausal{}, 200, 1000));
  out.push_back(rejection("jb-size", "Jarque-Bera under Gaussian errors, T=1000", "jb", dgp::WhiteNoise{2}, 1000,
                          5000));
  out.push_back(rejection("lm-size", "Breusch-Godfrey LM(2) under white-noise errors, T=200", "lm",
                          dgp::WhiteNoise{2}, 200, 5000));
  out.push_back(rejection("bpg-size", "Breusch-Pagan-Godfrey under homoscedastic errors, T=200", "bpg",
                          dgp::WhiteNoise{2}, 200, 5000));
  out.push_back(rejection("lm-power", "Breusch-Godfrey LM(2) under AR(1) errors rho=0.6, T=100", "lm",
                          dgp::Ar1{0.6}, 100, 2000));
  out.push_back(rejection("bpg-power", "Breusch-Pagan-Godfrey with error variance proportional to x^2, T=200",
                          "bpg", dgp::Hetero{1.0}, 200, 2000));
  out.push_back(rejection("cusum-size", "CUSUM instability rate under a stable regression, T=100", "cusum",
                          dgp::WhiteNoise{2}, 100, 2000));
  out.push_back(rejection("cusumsq-size", "CUSUMSQ instability rate under a stable regression, T=100", "cusumsq",
                          dgp::WhiteNoise{2}, 100, 2000));
  out.push_back(rejection("cusumsq-power", "CUSUMSQ detection of a 5 sigma mid-sample intercept break, T=100",
                          "cusumsq", dgp::Break{0.5, 5.0}, 100, 2000));
  out.push_back({"long-run-coverage", "ARDL(1,1) long-run slope within 3 SE of 2 on y = 2x + u, T=500", 500,
                 [](std::size_t r, std::uint64_t s, Execution x) { return long_run_coverage_experiment(500, r, s, x); }});
  out.push_back({"ecm-adjustment", "ECT coefficient on the error-correction DGP with adjustment -0.4, T=500", 500,
                 [](std::size_t r, std::uint64_t s, Execution x) { return ecm_adjustment_experiment(500, r, s, x); }});
  out.push_back({"fmols-bias", "FMOLS versus OLS median absolute slope error, endogeneity 0.7, T=500", 1000,
                 [](std::size_t r, std::uint64_t s, Execution x) { return fmols_bias_experiment(0.7, 500, r, s, x); }});
  out.push_back({"estimator-agreement", "FMOLS/DOLS/CCR pairwise agreement within 3 SE, exogenous DGP, T=200",
                 1000,
                 [](std::size_t r, std::uint64_t s, Execution x) { return estimator_agreement_experiment(200, r, s, x); }});
  out.push_back({"granger-direction", "One-way causal DGP detected as one-way, T=200", 500,
                 [](std::size_t r, std::uint64_t s, Execution x) { return granger_direction_experiment(200, r, s, x); }});
  out.push_back({"cv-adf-50", "Simulated ADF (constant) quantiles, n=50", 50000,
                 [](std::size_t r, std::uint64_t s, Execution x) {
                   return critical_value_experiment(UnitRootTest::Adf, 50, r, s, x);
                 }});
  out.push_back({"cv-adf-100", "Simulated ADF (constant) quantiles, n=100", 50000,
                 [](std::size_t r, std::uint64_t s, Execution x) {
                   return critical_value_experiment(UnitRootTest::Adf, 100, r, s, x);
                 }});
  out.push_back({"cv-dfgls-50", "Simulated DF-GLS (constant) quantiles, n=50", 50000,
                 [](std::size_t r, std::uint64_t s, Execution x) {
                   return critical_value_experiment(UnitRootTest::DfGls, 50, r, s, x);
                 }});
  out.push_back({"cv-dfgls-100", "Simulated DF-GLS (constant) quantiles, n=100", 50000,
                 [](std::size_t r, std::uint64_t s, Execution x) {
                   return critical_value_experiment(UnitRootTest::DfGls, 100, r, s, x);
                 }});
  return out;
}

}  // namespace

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> registry = build_registry();
  return registry;
}

const Experiment& find_experiment(const std::string& name) {
  for (const auto& e : experiments())
    if (e.name == name) return e;
  throw Error(ErrorKind::InvalidInput, "unknown experiment '" + name + "'");
}

SimReport run_experiment(const std::string& name, std::optional<std::size_t> reps, std::uint64_t seed,
                         Execution exec) {
  const auto& e = find_experiment(name);
  return e.run(reps.value_or(e.default_reps), seed, exec);
}

SimReport long_run_coverage_experiment(std::size_t length, std::size_t reps, std::uint64_t seed, Execution exec) {
  const auto start = Clock::now();
  const dgp::TriangularCoint truth{2.0, 0.0, 1};
  const auto flags = run_replications<int>(
      reps, seed,
      [&](std::uint64_t s) {
        const auto data = simulate_dgp(make_spec(truth, length, s));
        const ModelSpec spec{"y", {"x"}, true, false};
        const auto lr = long_run_coefficients(fit_ardl(data, spec, ArdlOrder{1, {1}})).front();
        return std::abs(lr.coefficient - truth.beta) <= 3.0 * lr.standard_error ? 1 : 0;
      },
      exec);
  auto report = base_report("long-run-coverage", "coverage", reps, seed);
  report.values = {{"coverage", share(flags)}};
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SimReport ecm_adjustment_experiment(std::size_t length, std::size_t reps, std::uint64_t seed, Execution exec) {
  const auto start = Clock::now();
  const dgp::ErrorCorrection truth;
  const auto ect = run_replications<double>(
      reps, seed,
      [&](std::uint64_t s) {
        const auto data = simulate_dgp(make_spec(truth, length, s));
        const ModelSpec spec{"y", {"x"}, true, false};
        return fit_ecm(data, spec, ArdlOrder{1, {1}}).ect_coefficient;
      },
      exec);
  std::vector<int> negative;
  for (double e : ect) negative.push_back(e < 0.0 ? 1 : 0);
  auto report = base_report("ecm-adjustment", "median_bias", reps, seed);
  report.values = {{"ect_negative_share", share(negative)},
                   {"ect_median", median(ect)},
                   {"ect_planted", truth.adjustment}};
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SimReport fmols_bias_experiment(double endo_corr, std::size_t length, std::size_t reps, std::uint64_t seed,
                                Execution exec) {
  const auto start = Clock::now();
  const dgp::TriangularCoint truth{2.0, endo_corr, 1};
  const auto errors = run_replications<std::pair<double, double>>(
      reps, seed,
      [&](std::uint64_t s) {
        const auto data = simulate_dgp(make_spec(truth, length, s));
        const ModelSpec spec{"y", {"x"}, true, false};
        const auto fm = coint_fit(data, spec, CointMethod::Fmols);
        DesignMatrix d;
        d.y = column(data, "y");
        d.x = Eigen::MatrixXd::Ones(d.y.size(), 1);
        d.names = {"C"};
        d.add_column("x", column(data, "x"));
        const auto ols = ols_fit(d);
        return std::pair{std::abs(fm.coef("x") - truth.beta), std::abs(ols.coef("x") - truth.beta)};
      },
      exec);
  std::vector<double> fm, ols;
  for (const auto& [a, b] : errors) {
    fm.push_back(a);
    ols.push_back(b);
  }
  auto report = base_report("fmols-bias", "median_bias", reps, seed);
  report.values = {{"fmols_median_abs_error", median(fm)}, {"ols_median_abs_error", median(ols)}};
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SimReport estimator_agreement_experiment(std::size_t length, std::size_t reps, std::uint64_t seed,
                                         Execution exec) {
  const auto start = Clock::now();
  const dgp::TriangularCoint truth{2.0, 0.0, 1};
  const auto flags = run_replications<int>(
      reps, seed,
      [&](std::uint64_t s) {
        const auto data = simulate_dgp(make_spec(truth, length, s));
        const ModelSpec spec{"y", {"x"}, true, false};
        const std::array<CointFit, 3> fits{coint_fit(data, spec, CointMethod::Fmols),
                                           coint_fit(data, spec, CointMethod::Dols),
                                           coint_fit(data, spec, CointMethod::Ccr)};
        for (std::size_t i = 0; i < fits.size(); ++i)
          for (std::size_t j = i + 1; j < fits.size(); ++j) {
            const double tol = 3.0 * std::min(fits[i].se("x"), fits[j].se("x"));
            if (std::abs(fits[i].coef("x") - fits[j].coef("x")) > tol) return 0;
          }
        return 1;
      },
      exec);
  auto report = base_report("estimator-agreement", "coverage", reps, seed);
  report.values = {{"agreement_rate", share(flags)}};
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SimReport granger_direction_experiment(std::size_t length, std::size_t reps, std::uint64_t seed,
                                       Execution exec) {
  const auto start = Clock::now();
  const auto flags = run_replications<int>(
      reps, seed,
      [&](std::uint64_t s) {
        const auto data = simulate_dgp(make_spec(dgp::VarCausal{}, length, s));
        const auto forward = granger_pair(data.get("x"), data.get("y"), 1);
        const auto backward = granger_pair(data.get("y"), data.get("x"), 1);
        return forward.reject_5 && !backward.reject_5 ? 1 : 0;
      },
      exec);
  auto report = base_report("granger-direction", "rejection_rate", reps, seed);
  report.values = {{"one_way_rate", share(flags)}};
  report.wall_time_seconds = seconds_since(start);
  return report;
}

SimReport critical_value_experiment(UnitRootTest test, std::size_t n, std::size_t reps, std::uint64_t seed,
                                    Execution exec) {
  const auto start = Clock::now();
  UnitRootSpec spec;
  spec.test = test;
  spec.deterministics = Deterministics::Constant;
  spec.lag_policy = LagPolicy::fixed(0);
  const auto sim = simulate_critical_values(spec, n, reps, seed, exec);
  const auto table = unit_root_critical_values(test, Deterministics::Constant, n);
  auto report = base_report(std::string("cv-") + to_string(test) + "-" + std::to_string(n), "quantiles", reps, seed);
  report.values = {{"sim_1pct", sim.pct1},     {"sim_5pct", sim.pct5},     {"sim_10pct", sim.pct10},
                   {"table_1pct", table.pct1}, {"table_5pct", table.pct5}, {"table_10pct", table.pct10}};
  report.wall_time_seconds = seconds_since(start);
  return report;
}

}  // namespace ardlkit
