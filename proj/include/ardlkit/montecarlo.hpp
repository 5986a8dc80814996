#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ardlkit/dataio.hpp"
#include "ardlkit/kernels.hpp"
#include "ardlkit/rng.hpp"
#include "ardlkit/unitroot.hpp"

namespace ardlkit {

namespace dgp {

/// y_t = sigma e_t; `series` independent columns (y, x, x2, ...).
struct WhiteNoise {
  int series = 1;
};
/// y_t = rho y_{t-1} + sigma e_t, |rho| < 1 after a 50-observation burn-in; rho = 1 starts at 0.
struct Ar1 {
  double rho = 0.0;
};
/// y_t = y_{t-1} + drift + sigma e_t from y_0 = 0; `series` independent walks.
struct RandomWalk {
  double drift = 0.0;
  int series = 1;
};
/// Cumulated random walk.
struct DoubleIntegrated {};
/// x_t = x_{t-1} + v_t, y_t = beta x_t + u_t, corr(u, v) = endo_corr via Cholesky
/// mixing; `regressors` independent x columns sharing the same beta.
struct TriangularCoint {
  double beta = 2.0;
  double endo_corr = 0.0;
  int regressors = 1;
};
/// x random walk; dy_t = adjustment (y_{t-1} - beta x_{t-1}) + sigma e_t.
struct ErrorCorrection {
  double beta = 2.0;
  double adjustment = -0.4;
};
/// y_t = a y_{t-1} + b x_{t-1} + sigma e_t with x white noise.
struct VarCausal {
  double a = 0.8;
  double b = 0.5;
};
/// y_t = 1 + x_t + magnitude sigma 1[t >= at] + sigma e_t, x ~ N(0, 1) i.i.d.
/// `at` is a fraction of the sample length.
struct Break {
  double at = 0.5;
  double magnitude = 5.0;
};
/// y_t = 1 + x_t + sigma x_t^x_link e_t with x ~ U(1, 4); x_link = 1 makes
/// the error variance proportional to x^2, x_link = 0 is homoscedastic.
struct Hetero {
  double x_link = 1.0;
};

}  // namespace dgp

using Process = std::variant<dgp::WhiteNoise, dgp::Ar1, dgp::RandomWalk, dgp::DoubleIntegrated,
                             dgp::TriangularCoint, dgp::ErrorCorrection, dgp::VarCausal, dgp::Break,
                             dgp::Hetero>;

std::string process_name(const Process& p);

struct DgpSpec {
  Process process = dgp::WhiteNoise{};
  std::size_t length = 100;
  double sigma = 1.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Burn-in discarded before recording autoregressive processes.
inline constexpr std::size_t kBurnIn = 50;

/// Deterministic in (process, length, sigma, seed). Variables are named y, x,
/// x2, ... and indexed by years 1..T.
Dataset simulate_dgp(const DgpSpec& spec);

struct SimReport {
  std::string experiment;
  std::size_t replications = 0;
  std::string metric;  // rejection_rate | median_bias | coverage | quantiles | ...
  std::vector<std::pair<std::string, double>> values;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0.0;

  double value(std::string_view key) const;
};

/// Runs `fn(seed_i)` for i < reps with seed_i = replication_seed(master, i);
/// results are ordered by replication index.
template <class T, class Fn>
std::vector<T> run_replications(std::size_t reps, std::uint64_t master_seed, Fn&& fn,
                                Execution exec = Execution::Parallel) {
  return replicate<T>(
      reps, [&](std::size_t i) { return fn(replication_seed(master_seed, i)); }, exec);
}

/// A named rejection rule evaluated on one simulated Dataset.
struct TestDescriptor {
  std::string name;
  std::function<bool(const Dataset&, double level)> rejects;
};

/// Resolves names such as "adf", "pp", "dfgls", "granger:2", "bounds", "jb",
/// "lm", "bpg", "cusum", "cusumsq". Unit-root tests act on variable y with a
/// constant; Granger tests x -> y; residual tests use the OLS of y on [1, x]
/// (or of y on a constant when no x exists). Throws InvalidInput when unknown.
TestDescriptor resolve_test(const std::string& name);

/// Fraction of replications in which the test rejects at `level`.
SimReport size_power_experiment(const DgpSpec& spec, const TestDescriptor& test, std::size_t reps,
                                double level = 0.05, Execution exec = Execution::Parallel);

/// Linear-interpolated (type 7) sample quantile; `values` is sorted in place.
double sample_quantile(std::vector<double>& values, double q);

/// Empirical 1%/5%/10% quantiles of a unit-root statistic under a driftless
/// random walk of length n.
CriticalValues simulate_critical_values(const UnitRootSpec& test, std::size_t n, std::size_t reps,
                                        std::uint64_t seed, Execution exec = Execution::Parallel);

}  // namespace ardlkit
