#include "ardlkit/linreg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ardlkit/distributions.hpp"
#include "ardlkit/kernels.hpp"

namespace ardlkit {

void DesignMatrix::validate() const {
  if (static_cast<std::size_t>(x.cols()) != names.size()) {
    throw Error(ErrorKind::InvalidInput, "design has " + std::to_string(x.cols()) + " columns but " +
                                             std::to_string(names.size()) + " names");
  }
  if (x.rows() != y.size()) {
    throw Error(ErrorKind::InvalidInput, "design and response lengths differ");
  }
  if (x.cols() == 0) throw Error(ErrorKind::InvalidInput, "design has no columns");
  if (x.rows() <= x.cols()) {
    throw Error(ErrorKind::TooShort, "regression of '" + response + "' has n = " +
                                         std::to_string(x.rows()) + " <= k = " + std::to_string(x.cols()));
  }
}

void DesignMatrix::add_column(std::string name, const Eigen::VectorXd& column) {
  if (x.cols() == 0 && x.rows() == 0) x.resize(column.size(), 0);
  x.conservativeResize(Eigen::NoChange, x.cols() + 1);
  x.col(x.cols() - 1) = column;
  names.push_back(std::move(name));
}

Eigen::Index DesignMatrix::constant_column() const {
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    const double v = x(0, c);
    if (v != 0.0 && (x.col(c).array() == v).all()) return c;
  }
  return -1;
}

Eigen::Index RegressionFit::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<Eigen::Index>(i);
  }
  throw Error(ErrorKind::InvalidInput, "no coefficient named '" + std::string(name) + "'");
}

namespace {

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
  return out;
}

// QR with the scale-aware rank check on the singular values of R.
Eigen::HouseholderQR<Eigen::MatrixXd> checked_qr(const Eigen::MatrixXd& x, const std::string& what) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(x);
  const Eigen::Index k = x.cols();
  Eigen::MatrixXd r = qr.matrixQR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r);
  const auto& s = svd.singularValues();
  if (!(s(0) > 0.0) || s(k - 1) < kRankTolerance * s(0)) {
    throw Error(ErrorKind::RankDeficient, "rank-deficient design for " + what);
  }
  return qr;
}

}  // namespace

RegressionFit ols_fit(const DesignMatrix& design) {
  design.validate();
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  const auto qr = checked_qr(design.x, "'" + design.response + "' on [" + joined(design.names) + "]");

  RegressionFit fit;
  fit.names = design.names;
  fit.nobs = n;
  fit.df_resid = n - k;
  fit.coefficients = qr.solve(design.y);
  fit.fitted = design.x * fit.coefficients;
  fit.residuals = design.y - fit.fitted;
  fit.rss = fit.residuals.squaredNorm();

  const double s2 = fit.rss / static_cast<double>(fit.df_resid);
  fit.sigma = std::sqrt(s2);
  Eigen::MatrixXd r = qr.matrixQR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
  Eigen::MatrixXd r_inv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
  fit.covariance = s2 * (r_inv * r_inv.transpose());
  fit.standard_errors = fit.covariance.diagonal().cwiseMax(0.0).cwiseSqrt();
  fit.t_statistics.resize(k);
  fit.p_values.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    fit.t_statistics(i) = fit.coefficients(i) / fit.standard_errors(i);
    fit.p_values(i) = dist::student_t_two_sided(fit.t_statistics(i), static_cast<double>(fit.df_resid));
  }

  double tss;
  if (design.constant_column() >= 0) {
    tss = (design.y.array() - design.y.mean()).square().sum();
  } else {
    tss = design.y.squaredNorm();
  }
  fit.r_squared = tss > 0.0 ? std::clamp(1.0 - fit.rss / tss, 0.0, 1.0) : 0.0;

  if (fit.rss > 0.0) {
    const auto ic = information_criteria(fit.rss, n, k);
    fit.aic = ic.aic;
    fit.bic = ic.bic;
    fit.hq = ic.hq;
  } else {
    fit.aic = fit.bic = fit.hq = std::numeric_limits<double>::quiet_NaN();
  }
  return fit;
}

double ols_rss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  if (x.rows() <= x.cols()) throw Error(ErrorKind::TooShort, "n <= k in auxiliary regression");
  const auto qr = checked_qr(x, "auxiliary regression");
  return (y - x * qr.solve(y)).squaredNorm();
}

std::optional<Criterion> parse_criterion(std::string_view text) {
  if (text == "aic" || text == "AIC") return Criterion::Aic;
  if (text == "bic" || text == "BIC" || text == "sic" || text == "SIC") return Criterion::Bic;
  if (text == "hq" || text == "HQ") return Criterion::Hq;
  return std::nullopt;
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::Aic: return "aic";
    case Criterion::Bic: return "bic";
    case Criterion::Hq: return "hq";
  }
  return "aic";
}

double InformationCriteria::get(Criterion c) const {
  switch (c) {
    case Criterion::Aic: return aic;
    case Criterion::Bic: return bic;
    case Criterion::Hq: return hq;
  }
  return aic;
}

InformationCriteria information_criteria(double rss, Eigen::Index n, Eigen::Index k) {
  if (n <= k) throw Error(ErrorKind::TooShort, "information criteria need n > k");
  if (!(rss > 0.0)) {
    throw Error(ErrorKind::Degenerate, "information criteria undefined for a perfect fit (rss = 0)");
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double base = nd * std::log(rss / nd);
  return {base + 2.0 * kd, base + kd * std::log(nd), base + 2.0 * kd * std::log(std::log(nd))};
}

InformationCriteria information_criteria(const RegressionFit& fit) {
  return information_criteria(fit.rss, fit.nobs, fit.nobs - fit.df_resid);
}

int automatic_bandwidth(Eigen::Index n) {
  return static_cast<int>(std::floor(4.0 * std::pow(static_cast<double>(n) / 100.0, 2.0 / 9.0)));
}

LongRunVariance long_run_variance(const Eigen::MatrixXd& u, std::optional<int> bandwidth) {
  const Eigen::Index n = u.rows();
  const int b = bandwidth.value_or(automatic_bandwidth(n));
  if (b < 0) throw Error(ErrorKind::InvalidInput, "bandwidth must be non-negative");
  if (static_cast<Eigen::Index>(b) >= n - 1) {
    throw Error(ErrorKind::TooShort, "bandwidth " + std::to_string(b) + " >= n - 1 = " + std::to_string(n - 1));
  }
  const auto exec = n * u.cols() * u.cols() * (b + 1) > 4'000'000 ? Execution::Parallel : Execution::Serial;
  const auto gammas = autocovariances(u, b, exec);

  LongRunVariance out;
  out.bandwidth = b;
  out.gamma0 = gammas[0];
  out.omega = gammas[0];
  out.lambda_one_sided = gammas[0];
  for (int j = 1; j <= b; ++j) {
    const double w = 1.0 - static_cast<double>(j) / static_cast<double>(b + 1);
    const auto& g = gammas[static_cast<std::size_t>(j)];
    out.omega += w * (g + g.transpose());
    out.lambda_one_sided += w * g;
  }
  out.omega = 0.5 * (out.omega + out.omega.transpose());
  return out;
}

LongRunVariance long_run_variance(const Eigen::VectorXd& u, std::optional<int> bandwidth) {
  return long_run_variance(Eigen::MatrixXd(u), bandwidth);
}

}  // namespace ardlkit
