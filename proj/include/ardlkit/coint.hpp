#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ardlkit/dataio.hpp"
#include "ardlkit/linreg.hpp"

namespace ardlkit {

enum class CointMethod { Fmols, Dols, Ccr };
const char* to_string(CointMethod m);
std::optional<CointMethod> parse_coint_method(std::string_view text);

struct CointTuning {
  std::optional<int> bandwidth;  // FMOLS/CCR and the DOLS residual long-run variance; nullopt = automatic
  int leads_lags = 1;            // DOLS q
};

/// Minimum effective sample for any cointegrating regression.
inline constexpr Eigen::Index kMinCointSample = 20;

struct CointFit {
  CointMethod method = CointMethod::Fmols;
  std::vector<std::string> names;  // "C" then the regressors
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_statistics;
  Eigen::VectorXd p_values;
  Eigen::MatrixXd covariance;
  int bandwidth = 0;
  int leads_lags = 0;
  Eigen::Index effective_sample = 0;
  double long_run_sigma2 = 0.0;  // conditional long-run variance used for inference

  double coef(std::string_view name) const;
  double se(std::string_view name) const;
};

/// Levels columns plus dx_{j,t+s} for s in [-q, q]; rows t = q+1 .. T-q-1
/// (0-based), so n = T - 2q - 1. Columns: C, regressors, then for every
/// regressor the differences ordered by s = -q..q.
DesignMatrix build_dols_design(const Dataset& data, const ModelSpec& spec, int q);

/// FMOLS (Phillips-Hansen), DOLS (Stock-Watson) or CCR (Park). The intercept is
/// always included; spec.intercept is ignored and spec.trend is rejected.
CointFit coint_fit(const Dataset& data, const ModelSpec& spec, CointMethod method,
                   const CointTuning& tuning = {});

}  // namespace ardlkit
