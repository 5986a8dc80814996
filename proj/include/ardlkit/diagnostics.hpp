#pragma once

#include <span>
#include <string>
#include <vector>

#include "ardlkit/linreg.hpp"

namespace ardlkit {

struct TestStatistic {
  double statistic = 0.0;
  double p_value = 1.0;
  int df = 0;
  bool pass = true;  // p_value > 0.05
};

/// Decision text used in diagnostic tables.
std::string jb_decision_text(double p_value);
std::string lm_decision_text(double p_value);
std::string bpg_decision_text(double p_value);

/// JB = n/6 (S^2 + (K-3)^2/4) with population (1/n) moments; p from chi2(2).
TestStatistic jarque_bera(std::span<const double> residuals);
TestStatistic jarque_bera(const Eigen::VectorXd& residuals);

/// Breusch-Godfrey: regress residuals on the design plus `order` lagged
/// residuals (pre-sample lags set to zero); statistic n R^2, p from chi2(order).
TestStatistic serial_correlation_lm(const RegressionFit& fit, const DesignMatrix& design, int order = 2);

/// Breusch-Pagan-Godfrey (Koenker n R^2 form): squared residuals on the design;
/// df = number of non-constant design columns.
TestStatistic heteroscedasticity_bpg(const RegressionFit& fit, const DesignMatrix& design);

struct DiagnosticReport {
  TestStatistic jb;
  TestStatistic lm;
  TestStatistic bpg;
  int lm_order = 2;
};

DiagnosticReport run_diagnostics(const RegressionFit& fit, const DesignMatrix& design, int lm_order = 2);

/// Standardized one-step-ahead prediction errors w_t, t = k+1..n, from
/// expanding-window OLS. Output length n - k.
std::vector<double> recursive_residuals(const DesignMatrix& design);

enum class StabilityKind { Cusum, Cusumsq };
const char* to_string(StabilityKind k);

struct StabilityPath {
  StabilityKind kind = StabilityKind::Cusum;
  std::size_t start_index = 0;  // observation index (1-based) of the first point, k + 1
  std::vector<double> path;
  std::vector<double> lower_bound;
  std::vector<double> upper_bound;
  bool stable = true;
  bool extrapolated_bounds = false;  // CUSUMSQ c0 outside the embedded table
};

struct CusumsqBound {
  double c0 = 0.0;
  bool extrapolated = false;
};

/// c0 for n' = (n - k)/2 - 1, linearly interpolated in the embedded table.
CusumsqBound cusumsq_c0(double n_prime);

/// CUSUM: W_t = sum_{j<=t} w_j / sigma_w with lines +-0.948 [sqrt(n-k) + 2(t-k)/sqrt(n-k)].
/// CUSUMSQ: S_t = sum_{j<=t} w_j^2 / sum w^2 with lines +-c0 + (t-k)/(n-k).
/// `k` is the number of design columns and n = k + w.size().
StabilityPath cusum_paths(std::span<const double> w, std::size_t k, StabilityKind kind);

}  // namespace ardlkit
