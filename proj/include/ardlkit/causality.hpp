#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ardlkit/dataio.hpp"

namespace ardlkit {

struct GrangerResult {
  std::string cause;
  std::string effect;
  int lags = 0;
  std::size_t nobs = 0;  // rows in the test regressions (T - lags)
  double f_statistic = 0.0;
  double p_value = 1.0;  // F(lags, nobs - 2 lags - 1) right tail
  bool reject_1 = false;
  bool reject_5 = false;
  bool reject_10 = false;
};

/// nullopt requests automatic selection over [1, kMaxAutoGrangerLags].
using GrangerLags = std::optional<int>;
inline constexpr int kMaxAutoGrangerLags = 4;

/// Lag order minimizing AIC(x-equation) + AIC(y-equation) of the unrestricted
/// bivariate VAR on the common sample; symmetric in (x, y). Ties go to fewer lags.
int select_granger_lags(std::span<const double> x, std::span<const double> y,
                        int max_lags = kMaxAutoGrangerLags);

/// Tests "cause does not Granger-cause effect": restricted (own lags) versus
/// unrestricted (own lags plus the cause's lags) regression of effect_t.
GrangerResult granger_pair(const TimeSeries& cause, const TimeSeries& effect, GrangerLags lags);
GrangerResult granger_pair(std::span<const double> cause, std::span<const double> effect, int lags,
                           std::string cause_name = "x", std::string effect_name = "y");

/// Both directions for every variable other than `effect`, in dataset order:
/// "X does not cause effect" followed by "effect does not cause X".
std::vector<GrangerResult> granger_matrix(const Dataset& data, const std::string& effect, GrangerLags lags);

}  // namespace ardlkit
