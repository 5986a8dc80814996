#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ardlkit/error.hpp"

namespace ardlkit {

/// Smallest/largest singular value ratio below which a design is declared
/// rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Regressor columns plus a response. Built by the estimators; `validate()`
/// checks shape (n > k, names match columns).
struct DesignMatrix {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  std::vector<std::string> names;
  std::string response = "y";

  Eigen::Index rows() const { return x.rows(); }
  Eigen::Index cols() const { return x.cols(); }
  void validate() const;
  void add_column(std::string name, const Eigen::VectorXd& column);
  /// Index of the first column whose entries are all equal and nonzero, or -1.
  Eigen::Index constant_column() const;
};

struct RegressionFit {
  std::vector<std::string> names;
  Eigen::VectorXd coefficients;
  Eigen::VectorXd standard_errors;
  Eigen::VectorXd t_statistics;
  Eigen::VectorXd p_values;   // two-sided, Student-t with df_resid
  Eigen::MatrixXd covariance; // s^2 (X'X)^-1
  Eigen::VectorXd fitted;
  Eigen::VectorXd residuals;
  double rss = 0.0;
  double r_squared = 0.0;     // centered when the design has a constant column
  double sigma = 0.0;         // sqrt(rss / df_resid)
  double aic = 0.0, bic = 0.0, hq = 0.0;  // NaN when rss == 0
  Eigen::Index nobs = 0;
  Eigen::Index df_resid = 0;

  Eigen::Index index_of(std::string_view name) const;
  double coef(std::string_view name) const { return coefficients(index_of(name)); }
  double se(std::string_view name) const { return standard_errors(index_of(name)); }
};

RegressionFit ols_fit(const DesignMatrix& design);

/// Residual sum of squares only; same rank checks as ols_fit.
double ols_rss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

enum class Criterion { Aic, Bic, Hq };

std::optional<Criterion> parse_criterion(std::string_view text);
const char* to_string(Criterion c);

struct InformationCriteria {
  double aic = 0.0;
  double bic = 0.0;
  double hq = 0.0;

  double get(Criterion c) const;
};

/// aic = n ln(rss/n) + 2k, bic = n ln(rss/n) + k ln n, hq = n ln(rss/n) + 2k ln ln n.
/// Throws Degenerate when rss == 0 and TooShort when n <= k.
InformationCriteria information_criteria(double rss, Eigen::Index n, Eigen::Index k);
InformationCriteria information_criteria(const RegressionFit& fit);

enum class Kernel { Bartlett };

struct LongRunVariance {
  Eigen::MatrixXd omega;             // Gamma_0 + sum_j w_j (Gamma_j + Gamma_j')
  Eigen::MatrixXd lambda_one_sided;  // sum_{j=0..B} w_j Gamma_j
  Eigen::MatrixXd gamma0;
  int bandwidth = 0;
  Kernel kernel = Kernel::Bartlett;
};

/// floor(4 (n/100)^(2/9)).
int automatic_bandwidth(Eigen::Index n);

/// Kernel long-run covariance of the columns of `u` (rows are time).
/// Gamma_j = (1/n) sum_{t>j} u_t u_{t-j}'. Inputs are used as-is (no demeaning).
LongRunVariance long_run_variance(const Eigen::MatrixXd& u, std::optional<int> bandwidth = std::nullopt);
LongRunVariance long_run_variance(const Eigen::VectorXd& u, std::optional<int> bandwidth = std::nullopt);

}  // namespace ardlkit
