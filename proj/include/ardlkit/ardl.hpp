#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ardlkit/dataio.hpp"
#include "ardlkit/linreg.hpp"

namespace ardlkit {

/// Lag orders of an ARDL(p, q_1, ..., q_k) model.
struct ArdlOrder {
  int p = 1;
  std::vector<int> q;

  int total() const;
  std::string label() const;  // "(2, 0, 1)"
  bool operator==(const ArdlOrder&) const = default;
};

/// Conditional error-correction form of the ARDL model:
///
///   dy_t = c + pi_y y_{t-1} + sum_j pi_j x_j* + sum_{i=1}^{p-1} phi_i dy_{t-i}
///          + sum_j sum_{i=0}^{q_j-1} theta_ji dx_{j,t-i} + e_t
///
/// where x_j* is x_{j,t-1} when q_j >= 1 and x_{j,t} when q_j = 0. This is an
/// exact reparametrization of the levels ARDL, so both share residuals.
struct ArdlFit {
  ArdlOrder order;
  std::string dependent;
  std::vector<std::string> regressors;
  bool intercept = true;
  bool trend = false;
  DesignMatrix design;
  RegressionFit levels_fit;
  std::size_t first_row = 0;  // index of the first regression row in the Dataset
  int first_year = 0;
  std::size_t effective_sample = 0;

  /// Column index of the lagged dependent level and of regressor j's level.
  Eigen::Index dependent_level_column() const;
  Eigen::Index regressor_level_column(std::size_t j) const;
};

/// Builds the error-correction design for `order` over Dataset rows
/// [first_row, T). first_row must be at least max(p, max q, 1).
DesignMatrix build_ardl_design(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order,
                               std::size_t first_row);

ArdlFit fit_ardl(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order);

/// Grid search over p in [1, max_p] and q_j in [0, max_q], every candidate on
/// the common sample starting at max(max_p, max_q, 1). Ties go to the smaller
/// p + sum q, then to the lexicographically smaller order.
ArdlOrder select_order(const Dataset& data, const ModelSpec& spec, int max_p, int max_q,
                       Criterion criterion = Criterion::Aic);

enum class BoundsTable { General, PaperTable4 };
const char* to_string(BoundsTable t);
/// "general" or "paper-table4".
std::optional<BoundsTable> parse_bounds_table(std::string_view text);

enum class BoundsDecision { Cointegrated, Inconclusive, NotCointegrated };
const char* to_string(BoundsDecision d);

struct BoundsRow {
  double significance;  // 0.10, 0.05, 0.025, 0.01
  double i0_bound;
  double i1_bound;
  BoundsDecision decision;
};

struct BoundsResult {
  double f_statistic = 0.0;
  int k = 0;
  std::string case_label;
  BoundsTable table = BoundsTable::General;
  std::array<BoundsRow, 4> rows{};

  const BoundsRow& at(double significance) const;
  bool cointegrated_at(double significance) const;
};

/// Case III (unrestricted intercept, no trend) bounds for k regressors.
std::array<BoundsRow, 4> bounds_critical_values(int k, BoundsTable table);

/// Compares an F statistic with the bounds for k regressors.
BoundsResult bounds_decision(double f_statistic, int k, BoundsTable table = BoundsTable::General);

/// Wald F for the joint nullity of every levels coefficient (y_{t-1} and each x_j*).
BoundsResult bounds_f_test(const ArdlFit& fit, BoundsTable table = BoundsTable::General);

struct LongRunCoefficient {
  std::string name;
  double coefficient = 0.0;
  double standard_error = 0.0;
  double t_statistic = 0.0;
  double p_value = 0.0;
};

/// theta_j = -pi_j / pi_y with delta-method standard errors; the intercept's
/// long-run value is reported last as "C" when present.
std::vector<LongRunCoefficient> long_run_coefficients(const ArdlFit& fit);

struct EcmFit {
  ArdlFit ardl;
  std::vector<LongRunCoefficient> long_run;
  DesignMatrix design;
  RegressionFit short_run;
  std::vector<double> ect;  // ECT_{t-1} aligned with the short-run rows
  double ect_coefficient = 0.0;
  double ect_standard_error = 0.0;
  bool convergent = false;  // ect_coefficient in (-2, 0)
};

/// Two-step error-correction model: long-run relationship from the ARDL
/// levels coefficients, then OLS of dy_t on the short-run differences and
/// ECT_{t-1} = y_{t-1} - sum_j theta_j x_j*.
EcmFit fit_ecm(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order);

/// Name of the error-correction regressor in short-run output.
inline constexpr const char* kEctName = "CointEq(-1)";

}  // namespace ardlkit
