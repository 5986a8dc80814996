#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ardlkit/montecarlo.hpp"

namespace ardlkit {

/// A named Monte Carlo experiment runnable from the command line.
struct Experiment {
  std::string name;
  std::string description;
  std::size_t default_reps = 0;
  std::function<SimReport(std::size_t reps, std::uint64_t seed, Execution exec)> run;
};

const std::vector<Experiment>& experiments();
const Experiment& find_experiment(const std::string& name);

/// Runs `name` with `reps` replications (default_reps when absent).
SimReport run_experiment(const std::string& name, std::optional<std::size_t> reps, std::uint64_t seed,
                         Execution exec = Execution::Parallel);

/// Share of ARDL(1, 1) fits on y = 2x + u with |theta - 2| <= 3 se.
SimReport long_run_coverage_experiment(std::size_t length, std::size_t reps, std::uint64_t seed,
                                       Execution exec = Execution::Parallel);

/// Share of negative ECT coefficients and their median on the
/// error-correction DGP (beta = 2, adjustment -0.4).
SimReport ecm_adjustment_experiment(std::size_t length, std::size_t reps, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

/// Median absolute slope error of FMOLS and OLS on the triangular DGP.
SimReport fmols_bias_experiment(double endo_corr, std::size_t length, std::size_t reps, std::uint64_t seed,
                                Execution exec = Execution::Parallel);

/// Share of replications in which FMOLS, DOLS and CCR slopes pairwise differ
/// by at most 3 times the smaller of the two standard errors.
SimReport estimator_agreement_experiment(std::size_t length, std::size_t reps, std::uint64_t seed,
                                         Execution exec = Execution::Parallel);

/// Share of replications where x -> y rejects and y -> x does not (5%) on
/// the one-way causal DGP.
SimReport granger_direction_experiment(std::size_t length, std::size_t reps, std::uint64_t seed,
                                       Execution exec = Execution::Parallel);

/// Simulated 1/5/10% quantiles next to the embedded table values.
SimReport critical_value_experiment(UnitRootTest test, std::size_t n, std::size_t reps, std::uint64_t seed,
                                    Execution exec = Execution::Parallel);

}  // namespace ardlkit
