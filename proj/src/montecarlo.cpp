#include "ardlkit/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "ardlkit/ardl.hpp"
#include "ardlkit/causality.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/linreg.hpp"

namespace ardlkit {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string series_name(int j) { return j == 0 ? "y" : (j == 1 ? "x" : "x" + std::to_string(j)); }

Dataset make_dataset(std::vector<std::vector<double>> columns) {
  std::vector<TimeSeries> vars;
  vars.reserve(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    vars.emplace_back(series_name(static_cast<int>(j)), 1, std::move(columns[j]));
  return Dataset(std::move(vars));
}

std::vector<double> random_walk(Rng& rng, std::size_t n, double drift, double sigma) {
  std::vector<double> y(n);
  double level = 0.0;
  for (auto& v : y) {
    level += drift + sigma * rng.normal();
    v = level;
  }
  return y;
}

Dataset simulate(const dgp::WhiteNoise& p, std::size_t n, double sigma, Rng& rng) {
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p.series), std::vector<double>(n));
  for (std::size_t t = 0; t < n; ++t)
    for (auto& c : cols) c[t] = sigma * rng.normal();
  return make_dataset(std::move(cols));
}

Dataset simulate(const dgp::Ar1& p, std::size_t n, double sigma, Rng& rng) {
  if (p.rho == 1.0) return make_dataset({random_walk(rng, n, 0.0, sigma)});
  std::vector<double> y(n);
  double level = 0.0;
  for (std::size_t t = 0; t < kBurnIn + n; ++t) {
    level = p.rho * level + sigma * rng.normal();
    if (t >= kBurnIn) y[t - kBurnIn] = level;
  }
  return make_dataset({std::move(y)});
}

Dataset simulate(const dgp::RandomWalk& p, std::size_t n, double sigma, Rng& rng) {
  std::vector<std::vector<double>> cols(static_cast<std::size_t>(p.series), std::vector<double>(n));
  std::vector<double> level(cols.size(), 0.0);
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      level[j] += p.drift + sigma * rng.normal();
      cols[j][t] = level[j];
    }
  return make_dataset(std::move(cols));
}

Dataset simulate(const dgp::DoubleIntegrated&, std::size_t n, double sigma, Rng& rng) {
  std::vector<double> y = random_walk(rng, n, 0.0, sigma);
  double acc = 0.0;
  for (auto& v : y) {
    acc += v;
    v = acc;
  }
  return make_dataset({std::move(y)});
}

Dataset simulate(const dgp::TriangularCoint& p, std::size_t n, double sigma, Rng& rng) {
  const auto k = static_cast<std::size_t>(p.regressors);
  const double mix = std::sqrt(1.0 - p.endo_corr * p.endo_corr);
  std::vector<std::vector<double>> cols(k + 1, std::vector<double>(n));
  std::vector<double> x(k, 0.0), v(k);
  for (std::size_t t = 0; t < n; ++t) {
    for (auto& e : v) e = rng.normal();
    const double u = sigma * (p.endo_corr * v[0] + mix * rng.normal());
    double y = u;
    for (std::size_t j = 0; j < k; ++j) {
      x[j] += sigma * v[j];
      cols[j + 1][t] = x[j];
      y += p.beta * x[j];
    }
    cols[0][t] = y;
  }
  return make_dataset(std::move(cols));
}

Dataset simulate(const dgp::ErrorCorrection& p, std::size_t n, double sigma, Rng& rng) {
  std::vector<double> y(n), x(n);
  double yl = 0.0, xl = 0.0;
  for (std::size_t t = 0; t < kBurnIn + n; ++t) {
    const double dy = p.adjustment * (yl - p.beta * xl) + sigma * rng.normal();
    xl += sigma * rng.normal();
    yl += dy;
    if (t >= kBurnIn) {
      y[t - kBurnIn] = yl;
      x[t - kBurnIn] = xl;
    }
  }
  return make_dataset({std::move(y), std::move(x)});
}

Dataset simulate(const dgp::VarCausal& p, std::size_t n, double sigma, Rng& rng) {
  std::vector<double> y(n), x(n);
  double yl = 0.0, xl = 0.0;
  for (std::size_t t = 0; t < kBurnIn + n; ++t) {
    const double yn = p.a * yl + p.b * xl + sigma * rng.normal();
    xl = sigma * rng.normal();
    yl = yn;
    if (t >= kBurnIn) {
      y[t - kBurnIn] = yl;
      x[t - kBurnIn] = xl;
    }
  }
  return make_dataset({std::move(y), std::move(x)});
}

Dataset simulate(const dgp::Break& p, std::size_t n, double sigma, Rng& rng) {
  const auto at = static_cast<std::size_t>(std::floor(p.at * static_cast<double>(n)));
  std::vector<double> y(n), x(n);
  for (std::size_t t = 0; t < n; ++t) {
    x[t] = rng.normal();
    y[t] = 1.0 + x[t] + (t >= at ? p.magnitude * sigma : 0.0) + sigma * rng.normal();
  }
  return make_dataset({std::move(y), std::move(x)});
}

Dataset simulate(const dgp::Hetero& p, std::size_t n, double sigma, Rng& rng) {
  std::vector<double> y(n), x(n);
  for (std::size_t t = 0; t < n; ++t) {
    x[t] = rng.uniform(1.0, 4.0);
    y[t] = 1.0 + x[t] + sigma * std::pow(x[t], p.x_link) * rng.normal();
  }
  return make_dataset({std::move(y), std::move(x)});
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidInput, message);
}

}  // namespace

std::string process_name(const Process& p) {
  return std::visit(
      Overloaded{[](const dgp::WhiteNoise&) { return std::string("white_noise"); },
                 [](const dgp::Ar1&) { return std::string("ar1"); },
                 [](const dgp::RandomWalk&) { return std::string("random_walk"); },
                 [](const dgp::DoubleIntegrated&) { return std::string("double_integrated"); },
                 [](const dgp::TriangularCoint&) { return std::string("triangular_coint"); },
                 [](const dgp::ErrorCorrection&) { return std::string("error_correction"); },
                 [](const dgp::VarCausal&) { return std::string("var_causal"); },
                 [](const dgp::Break&) { return std::string("break"); },
                 [](const dgp::Hetero&) { return std::string("hetero"); }},
      p);
}

void DgpSpec::validate() const {
  require(length >= 20, "simulated series need at least 20 observations");
  require(std::isfinite(sigma) && sigma > 0.0, "innovation scale must be positive");
  std::visit(Overloaded{
                 [](const dgp::WhiteNoise& p) { require(p.series >= 1, "white_noise needs at least one series"); },
                 [](const dgp::Ar1& p) {
                   require(p.rho > -1.0 && p.rho <= 1.0, "ar1 coefficient must lie in (-1, 1]");
                 },
                 [](const dgp::RandomWalk& p) {
                   require(p.series >= 1, "random_walk needs at least one series");
                   require(std::isfinite(p.drift), "random_walk drift must be finite");
                 },
                 [](const dgp::DoubleIntegrated&) {},
                 [](const dgp::TriangularCoint& p) {
                   require(p.regressors >= 1, "triangular_coint needs at least one regressor");
                   require(std::isfinite(p.beta), "triangular_coint beta must be finite");
                   require(p.endo_corr > -1.0 && p.endo_corr < 1.0, "endogeneity correlation must lie in (-1, 1)");
                 },
                 [](const dgp::ErrorCorrection& p) {
                   require(p.adjustment > -2.0 && p.adjustment < 0.0, "adjustment must lie in (-2, 0)");
                   require(std::isfinite(p.beta), "error_correction beta must be finite");
                 },
                 [](const dgp::VarCausal& p) {
                   require(std::abs(p.a) < 1.0, "var_causal needs |a| < 1");
                   require(std::isfinite(p.b), "var_causal b must be finite");
                 },
                 [](const dgp::Break& p) {
                   require(p.at > 0.0 && p.at < 1.0, "break point must be a fraction in (0, 1)");
                   require(std::isfinite(p.magnitude), "break magnitude must be finite");
                 },
                 [](const dgp::Hetero& p) { require(std::isfinite(p.x_link), "hetero x_link must be finite"); }},
             process);
}

Dataset simulate_dgp(const DgpSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  return std::visit([&](const auto& p) { return simulate(p, spec.length, spec.sigma, rng); }, spec.process);
}

double SimReport::value(std::string_view key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  throw Error(ErrorKind::InvalidInput, "simulation report has no value '" + std::string(key) + "'");
}

namespace {

double critical_at(const CriticalValues& cv, double level) {
  if (std::abs(level - 0.01) < 1e-12) return cv.pct1;
  if (std::abs(level - 0.05) < 1e-12) return cv.pct5;
  if (std::abs(level - 0.10) < 1e-12) return cv.pct10;
  throw Error(ErrorKind::Unsupported, "unit-root critical values exist only at 1%, 5% and 10%");
}

DesignMatrix residual_design(const Dataset& data) {
  const auto& y = data.get("y").values();
  const auto n = static_cast<Eigen::Index>(y.size());
  DesignMatrix d;
  d.y = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
  d.x = Eigen::MatrixXd::Ones(n, 1);
  d.names = {"C"};
  for (const auto& v : data.variables()) {
    if (v.name() == "y") continue;
    d.add_column(v.name(), Eigen::Map<const Eigen::VectorXd>(v.values().data(), n));
  }
  return d;
}

int suffix_int(const std::string& name, std::size_t colon, int fallback) {
  if (colon == std::string::npos) return fallback;
  const std::string tail = name.substr(colon + 1);
  try {
    std::size_t used = 0;
    const int v = std::stoi(tail, &used);
    if (used == tail.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidInput, "bad lag suffix in test descriptor '" + name + "'");
}

TestDescriptor unit_root_descriptor(const std::string& name, UnitRootTest test) {
  UnitRootSpec spec;
  spec.test = test;
  spec.deterministics = Deterministics::Constant;
  spec.lag_policy = LagPolicy::schwert();
  return {name, [spec](const Dataset& d, double level) {
            const auto r = unit_root_test(std::span<const double>(d.get("y").values()), spec);
            return r.statistic < critical_at(r.critical_values, level);
          }};
}

}  // namespace

TestDescriptor resolve_test(const std::string& name) {
  const auto colon = name.find(':');
  const std::string base = name.substr(0, colon);
  if (base == "adf" && colon == std::string::npos) return unit_root_descriptor(name, UnitRootTest::Adf);
  if (base == "pp" && colon == std::string::npos) return unit_root_descriptor(name, UnitRootTest::Pp);
  if (base == "dfgls" && colon == std::string::npos) return unit_root_descriptor(name, UnitRootTest::DfGls);
  if (base == "granger") {
    const int lags = suffix_int(name, colon, 1);
    return {name, [lags](const Dataset& d, double level) {
              const auto r = granger_pair(d.get("x"), d.get("y"), lags);
              return r.p_value < level;
            }};
  }
  if (base == "bounds") {
    const int p = suffix_int(name, colon, 1);
    return {name, [p](const Dataset& d, double level) {
              ModelSpec spec;
              spec.dependent = "y";
              for (const auto& v : d.variables())
                if (v.name() != "y") spec.regressors.push_back(v.name());
              const ArdlOrder order{p, std::vector<int>(spec.regressors.size(), p)};
              const auto bounds = bounds_f_test(fit_ardl(d, spec, order));
              return bounds.cointegrated_at(level);
            }};
  }
  if (colon != std::string::npos) throw Error(ErrorKind::InvalidInput, "unknown test descriptor '" + name + "'");
  if (base == "jb")
    return {name, [](const Dataset& d, double level) {
              return jarque_bera(ols_fit(residual_design(d)).residuals).p_value < level;
            }};
  if (base == "lm")
    return {name, [](const Dataset& d, double level) {
              const auto design = residual_design(d);
              return serial_correlation_lm(ols_fit(design), design).p_value < level;
            }};
  if (base == "bpg")
    return {name, [](const Dataset& d, double level) {
              const auto design = residual_design(d);
              if (design.cols() < 2) throw Error(ErrorKind::InvalidInput, "bpg needs a regressor x");
              return heteroscedasticity_bpg(ols_fit(design), design).p_value < level;
            }};
  if (base == "cusum" || base == "cusumsq") {
    const auto kind = base == "cusum" ? StabilityKind::Cusum : StabilityKind::Cusumsq;
    return {name, [kind](const Dataset& d, double level) {
              if (std::abs(level - 0.05) > 1e-12)
                throw Error(ErrorKind::Unsupported, "stability bounds exist only at 5%");
              const auto design = residual_design(d);
              const auto w = recursive_residuals(design);
              return !cusum_paths(w, static_cast<std::size_t>(design.cols()), kind).stable;
            }};
  }
  throw Error(ErrorKind::InvalidInput, "unknown test descriptor '" + name + "'");
}

SimReport size_power_experiment(const DgpSpec& spec, const TestDescriptor& test, std::size_t reps,
                                double level, Execution exec) {
  spec.validate();
  require(reps >= 100, "size/power experiments need at least 100 replications");
  require(level > 0.0 && level < 1.0, "significance level must lie in (0, 1)");
  require(static_cast<bool>(test.rejects), "test descriptor has no rejection rule");
  const auto start = std::chrono::steady_clock::now();
  const auto hits = run_replications<int>(
      reps, spec.seed,
      [&](std::uint64_t seed) {
        DgpSpec rep = spec;
        rep.seed = seed;
        return test.rejects(simulate_dgp(rep), level) ? 1 : 0;
      },
      exec);
  std::size_t count = 0;
  for (int h : hits) count += static_cast<std::size_t>(h);
  SimReport report;
  report.experiment = test.name + " under " + process_name(spec.process);
  report.replications = reps;
  report.metric = "rejection_rate";
  report.values = {{"rejection_rate", static_cast<double>(count) / static_cast<double>(reps)}, {"level", level}};
  report.seed = spec.seed;
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

double sample_quantile(std::vector<double>& values, double q) {
  require(!values.empty(), "quantile of an empty sample");
  require(q >= 0.0 && q <= 1.0, "quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = (static_cast<double>(values.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

CriticalValues simulate_critical_values(const UnitRootSpec& test, std::size_t n, std::size_t reps,
                                        std::uint64_t seed, Execution exec) {
  test.validate();
  require(reps >= 10000, "critical-value simulation needs at least 10000 replications");
  require(n >= 20, "simulated series need at least 20 observations");
  auto stats = run_replications<double>(
      reps, seed,
      [&](std::uint64_t s) {
        Rng rng(s);
        const auto y = random_walk(rng, n, 0.0, 1.0);
        return unit_root_test(std::span<const double>(y), test).statistic;
      },
      exec);
  CriticalValues cv;
  cv.pct1 = sample_quantile(stats, 0.01);
  cv.pct5 = sample_quantile(stats, 0.05);
  cv.pct10 = sample_quantile(stats, 0.10);
  return cv;
}

}  // namespace ardlkit
