#include "ardlkit/coint.hpp"

#include <cmath>

#include "ardlkit/distributions.hpp"

namespace ardlkit {

const char* to_string(CointMethod m) {
  switch (m) {
    case CointMethod::Fmols: return "fmols";
    case CointMethod::Dols: return "dols";
    case CointMethod::Ccr: return "ccr";
  }
  return "fmols";
}

std::optional<CointMethod> parse_coint_method(std::string_view text) {
  if (text == "fmols") return CointMethod::Fmols;
  if (text == "dols") return CointMethod::Dols;
  if (text == "ccr") return CointMethod::Ccr;
  return std::nullopt;
}

double CointFit::coef(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return coefficients(static_cast<Eigen::Index>(i));
  }
  throw Error(ErrorKind::InvalidInput, "no coefficient named '" + std::string(name) + "'");
}

double CointFit::se(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return standard_errors(static_cast<Eigen::Index>(i));
  }
  throw Error(ErrorKind::InvalidInput, "no coefficient named '" + std::string(name) + "'");
}

namespace {

void check_spec(const Dataset& data, const ModelSpec& spec) {
  spec.validate(data);
  if (spec.regressors.empty()) throw Error(ErrorKind::InvalidInput, "cointegrating regression needs regressors");
  if (spec.trend) throw Error(ErrorKind::Unsupported, "deterministic trend is not supported in FMOLS/DOLS/CCR");
}

// Levels design [1, x_t] over rows [first, T).
DesignMatrix levels_design(const Dataset& data, const ModelSpec& spec, std::size_t first) {
  const std::size_t T = data.length();
  const auto n = static_cast<Eigen::Index>(T - first);
  DesignMatrix d;
  d.response = spec.dependent;
  const auto& y = data.get(spec.dependent).values();
  d.y = Eigen::Map<const Eigen::VectorXd>(y.data() + first, n);
  d.add_column("C", Eigen::VectorXd::Ones(n));
  for (const auto& r : spec.regressors) {
    const auto& x = data.get(r).values();
    d.add_column(r, Eigen::Map<const Eigen::VectorXd>(x.data() + first, n));
  }
  return d;
}

// dx_t for rows [first, T), first >= 1, one column per regressor.
Eigen::MatrixXd differences(const Dataset& data, const ModelSpec& spec, std::size_t first) {
  const std::size_t T = data.length();
  const auto n = static_cast<Eigen::Index>(T - first);
  Eigen::MatrixXd v(n, static_cast<Eigen::Index>(spec.regressors.size()));
  for (std::size_t j = 0; j < spec.regressors.size(); ++j) {
    const auto& x = data.get(spec.regressors[j]).values();
    for (Eigen::Index r = 0; r < n; ++r) {
      const std::size_t t = first + static_cast<std::size_t>(r);
      v(r, static_cast<Eigen::Index>(j)) = x[t] - x[t - 1];
    }
  }
  return v;
}

void finish_inference(CointFit& fit, double df) {
  const Eigen::Index k = fit.coefficients.size();
  fit.standard_errors = fit.covariance.diagonal().cwiseMax(0.0).cwiseSqrt();
  fit.t_statistics = fit.coefficients.cwiseQuotient(fit.standard_errors);
  fit.p_values.resize(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    fit.p_values(i) = dist::student_t_two_sided(fit.t_statistics(i), df);
  }
}

void require_sample(Eigen::Index n, Eigen::Index k) {
  if (n < kMinCointSample) {
    throw Error(ErrorKind::TooShort, "effective sample " + std::to_string(n) + " < " +
                                         std::to_string(kMinCointSample) + " for cointegrating regression");
  }
  if (n <= k) throw Error(ErrorKind::TooShort, "cointegrating regression has n <= k");
}

// Conditional long-run variance omega_uu - omega_uv omega_vv^-1 omega_vu.
double conditional_variance(const Eigen::MatrixXd& omega, const Eigen::MatrixXd& omega_vv_inv) {
  const Eigen::Index m = omega.rows() - 1;
  const Eigen::RowVectorXd ouv = omega.block(0, 1, 1, m);
  return omega(0, 0) - (ouv * omega_vv_inv * ouv.transpose())(0, 0);
}

Eigen::MatrixXd checked_inverse(const Eigen::MatrixXd& m, const char* what) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (!(s(0) > 0.0) || s(s.size() - 1) < kRankTolerance * s(0)) {
    throw Error(ErrorKind::RankDeficient, std::string("singular ") + what);
  }
  return m.inverse();
}

CointFit fmols_or_ccr(const Dataset& data, const ModelSpec& spec, CointMethod method,
                      const CointTuning& tuning) {
  // Sample starts at t = 1 so that dx_t is available for every row.
  const auto design = levels_design(data, spec, 1);
  const Eigen::Index n = design.rows();
  const Eigen::Index m = static_cast<Eigen::Index>(spec.regressors.size());
  require_sample(n, m + 1);
  const auto first_stage = ols_fit(design);
  const Eigen::MatrixXd v = differences(data, spec, 1);

  Eigen::MatrixXd w(n, m + 1);
  w.col(0) = first_stage.residuals;
  w.rightCols(m) = v;
  const auto lrv = long_run_variance(w, tuning.bandwidth);
  const Eigen::MatrixXd& omega = lrv.omega;
  const Eigen::MatrixXd& lambda = lrv.lambda_one_sided;
  const Eigen::MatrixXd omega_vv_inv = checked_inverse(omega.bottomRightCorner(m, m), "long-run covariance of dx");
  const Eigen::RowVectorXd omega_uv = omega.block(0, 1, 1, m);

  CointFit fit;
  fit.method = method;
  fit.names = design.names;
  fit.bandwidth = lrv.bandwidth;
  fit.effective_sample = n;
  fit.long_run_sigma2 = conditional_variance(omega, omega_vv_inv);

  if (method == CointMethod::Fmols) {
    // y+ = y - omega_uv omega_vv^-1 dx ; lambda+_uv = lambda_uv - omega_uv omega_vv^-1 lambda_vv
    const Eigen::VectorXd y_plus = design.y - v * (omega_vv_inv * omega_uv.transpose());
    const Eigen::RowVectorXd lambda_plus =
        lambda.block(0, 1, 1, m) - omega_uv * omega_vv_inv * lambda.bottomRightCorner(m, m);
    const Eigen::MatrixXd zz_inv = checked_inverse(design.x.transpose() * design.x, "levels cross-product");
    Eigen::VectorXd rhs = design.x.transpose() * y_plus;
    rhs.tail(m) -= static_cast<double>(n) * lambda_plus.transpose();
    fit.coefficients = zz_inv * rhs;
    fit.covariance = fit.long_run_sigma2 * zz_inv;
  } else {
    // Park's canonical transformation.
    const Eigen::MatrixXd sigma_inv = checked_inverse(lrv.gamma0, "contemporaneous covariance");
    const Eigen::MatrixXd lambda2 = lambda.rightCols(m);  // (m+1) x m
    const Eigen::VectorXd beta = first_stage.coefficients.tail(m);
    const Eigen::MatrixXd shift_x = sigma_inv * lambda2;  // (m+1) x m
    Eigen::VectorXd shift_y = sigma_inv * lambda2 * beta;
    shift_y.tail(m) += omega_vv_inv * omega_uv.transpose();

    DesignMatrix star = design;
    star.x.rightCols(m) = design.x.rightCols(m) - w * shift_x;
    star.y = design.y - w * shift_y;
    const Eigen::MatrixXd zz_inv = checked_inverse(star.x.transpose() * star.x, "transformed cross-product");
    fit.coefficients = zz_inv * (star.x.transpose() * star.y);
    fit.covariance = fit.long_run_sigma2 * zz_inv;
  }
  finish_inference(fit, static_cast<double>(n - m - 1));
  return fit;
}

}  // namespace

DesignMatrix build_dols_design(const Dataset& data, const ModelSpec& spec, int q) {
  check_spec(data, spec);
  if (q < 0) throw Error(ErrorKind::InvalidInput, "DOLS leads/lags must be >= 0");
  const std::size_t T = data.length();
  const auto qq = static_cast<std::size_t>(q);
  if (2 * qq + 1 >= T) {
    throw Error(ErrorKind::TooShort, "DOLS leads/lags q = " + std::to_string(q) + " too large for " +
                                         std::to_string(T) + " observations");
  }
  const std::size_t first = qq + 1;
  const std::size_t last = T - qq;  // exclusive
  const auto n = static_cast<Eigen::Index>(last - first);

  DesignMatrix d;
  d.response = spec.dependent;
  const auto& y = data.get(spec.dependent).values();
  d.y = Eigen::Map<const Eigen::VectorXd>(y.data() + first, n);
  d.add_column("C", Eigen::VectorXd::Ones(n));
  for (const auto& r : spec.regressors) {
    const auto& x = data.get(r).values();
    d.add_column(r, Eigen::Map<const Eigen::VectorXd>(x.data() + first, n));
  }
  for (const auto& r : spec.regressors) {
    const auto& x = data.get(r).values();
    for (int s = -q; s <= q; ++s) {
      Eigen::VectorXd c(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        const auto t = static_cast<std::ptrdiff_t>(first) + i + s;
        c(i) = x[static_cast<std::size_t>(t)] - x[static_cast<std::size_t>(t - 1)];
      }
      std::string name = "D(" + r;
      if (s != 0) name += "(" + std::string(s > 0 ? "+" : "") + std::to_string(s) + ")";
      d.add_column(name + ")", c);
    }
  }
  return d;
}

CointFit coint_fit(const Dataset& data, const ModelSpec& spec, CointMethod method, const CointTuning& tuning) {
  check_spec(data, spec);
  if (method != CointMethod::Dols) return fmols_or_ccr(data, spec, method, tuning);

  const auto design = build_dols_design(data, spec, tuning.leads_lags);
  require_sample(design.rows(), design.cols());
  const auto ols = ols_fit(design);
  const auto lrv = long_run_variance(ols.residuals, tuning.bandwidth);
  const Eigen::Index k = static_cast<Eigen::Index>(spec.regressors.size()) + 1;

  CointFit fit;
  fit.method = method;
  fit.names.assign(design.names.begin(), design.names.begin() + k);
  fit.coefficients = ols.coefficients.head(k);
  fit.bandwidth = lrv.bandwidth;
  fit.leads_lags = tuning.leads_lags;
  fit.effective_sample = design.rows();
  fit.long_run_sigma2 = lrv.omega(0, 0);
  // OLS covariance rescaled from s^2 to the residual long-run variance.
  const double s2 = ols.sigma * ols.sigma;
  fit.covariance = ols.covariance.topLeftCorner(k, k) * (fit.long_run_sigma2 / s2);
  finish_inference(fit, static_cast<double>(ols.df_resid));
  return fit;
}

}  // namespace ardlkit
