#include "ardlkit/diagnostics.hpp"

#include <cmath>
#include <numeric>

#include "ardlkit/distributions.hpp"

namespace ardlkit {

const char* to_string(StabilityKind k) { return k == StabilityKind::Cusum ? "cusum" : "cusumsq"; }

std::string jb_decision_text(double p) {
  return p > 0.05 ? "Residuals are normally distributed" : "Residuals are not normally distributed";
}
std::string lm_decision_text(double p) {
  return p > 0.05 ? "No serial correlation exists" : "Serial correlation exists";
}
std::string bpg_decision_text(double p) {
  return p > 0.05 ? "No heteroscedasticity exists" : "Heteroscedasticity exists";
}

TestStatistic jarque_bera(std::span<const double> e) {
  const std::size_t n = e.size();
  if (n < 8) throw Error(ErrorKind::TooShort, "Jarque-Bera needs at least 8 residuals");
  const double nd = static_cast<double>(n);
  const double mean = std::accumulate(e.begin(), e.end(), 0.0) / nd;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : e) {
    const double d = v - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= nd;
  m3 /= nd;
  m4 /= nd;
  if (!(m2 > 0.0)) throw Error(ErrorKind::Degenerate, "Jarque-Bera undefined for zero-variance residuals");
  const double s = m3 / std::pow(m2, 1.5);
  const double k = m4 / (m2 * m2);
  TestStatistic out;
  out.statistic = nd / 6.0 * (s * s + (k - 3.0) * (k - 3.0) / 4.0);
  out.df = 2;
  out.p_value = dist::chi2_upper(out.statistic, 2.0);
  out.pass = out.p_value > 0.05;
  return out;
}

TestStatistic jarque_bera(const Eigen::VectorXd& e) {
  return jarque_bera(std::span<const double>(e.data(), static_cast<std::size_t>(e.size())));
}

namespace {

// n R^2 of an auxiliary regression; R^2 centered when the design has a constant.
double n_r_squared(const DesignMatrix& aux) {
  const auto fit = ols_fit(aux);
  return static_cast<double>(aux.rows()) * fit.r_squared;
}

}  // namespace

TestStatistic serial_correlation_lm(const RegressionFit& fit, const DesignMatrix& design, int order) {
  if (order < 1) throw Error(ErrorKind::InvalidInput, "LM order must be >= 1");
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (n <= k + order) {
    throw Error(ErrorKind::TooShort, "LM test: degrees of freedom exhausted (n = " + std::to_string(n) +
                                         ", k + h = " + std::to_string(k + order) + ")");
  }
  DesignMatrix aux;
  aux.response = "resid";
  aux.y = fit.residuals;
  aux.x = design.x;
  aux.names = design.names;
  for (int h = 1; h <= order; ++h) {
    Eigen::VectorXd lag = Eigen::VectorXd::Zero(n);
    lag.tail(n - h) = fit.residuals.head(n - h);
    aux.add_column("resid(-" + std::to_string(h) + ")", lag);
  }
  TestStatistic out;
  out.statistic = n_r_squared(aux);
  out.df = order;
  out.p_value = dist::chi2_upper(out.statistic, order);
  out.pass = out.p_value > 0.05;
  return out;
}

TestStatistic heteroscedasticity_bpg(const RegressionFit& fit, const DesignMatrix& design) {
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (n <= k + 1) throw Error(ErrorKind::TooShort, "BPG test: degrees of freedom exhausted");
  const Eigen::Index constant = design.constant_column();
  const int df = static_cast<int>(k - (constant >= 0 ? 1 : 0));
  if (df < 1) throw Error(ErrorKind::Degenerate, "BPG test needs at least one non-constant regressor");

  DesignMatrix aux;
  aux.response = "resid^2";
  aux.y = fit.residuals.array().square();
  aux.x = design.x;
  aux.names = design.names;
  if (constant < 0) aux.add_column("C", Eigen::VectorXd::Ones(n));
  if ((aux.y.array() == aux.y(0)).all()) {
    throw Error(ErrorKind::Degenerate, "BPG auxiliary regression has a constant response");
  }
  TestStatistic out;
  out.statistic = n_r_squared(aux);
  out.df = df;
  out.p_value = dist::chi2_upper(out.statistic, df);
  out.pass = out.p_value > 0.05;
  return out;
}

DiagnosticReport run_diagnostics(const RegressionFit& fit, const DesignMatrix& design, int lm_order) {
  DiagnosticReport r;
  r.lm_order = lm_order;
  r.jb = jarque_bera(fit.residuals);
  r.lm = serial_correlation_lm(fit, design, lm_order);
  r.bpg = heteroscedasticity_bpg(fit, design);
  return r;
}

std::vector<double> recursive_residuals(const DesignMatrix& design) {
  design.validate();
  const Eigen::Index n = design.rows();
  const Eigen::Index k = design.cols();
  if (n <= k + 1) throw Error(ErrorKind::TooShort, "recursive residuals need n > k + 1");

  // Initial window: the first k rows must already identify the coefficients.
  const Eigen::MatrixXd x0 = design.x.topRows(k);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x0, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (!(s(0) > 0.0) || s(k - 1) < kRankTolerance * s(0)) {
    throw Error(ErrorKind::RankDeficient, "recursive residuals: first " + std::to_string(k) +
                                              " observations are rank deficient");
  }
  Eigen::MatrixXd p = (x0.transpose() * x0).inverse();  // (X'X)^-1 of the current window
  Eigen::VectorXd b = svd.solve(design.y.head(k));

  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(n - k));
  for (Eigen::Index t = k; t < n; ++t) {
    const Eigen::VectorXd xt = design.x.row(t).transpose();
    const Eigen::VectorXd px = p * xt;
    const double f = 1.0 + xt.dot(px);
    const double err = design.y(t) - xt.dot(b);
    w.push_back(err / std::sqrt(f));
    // Sherman-Morrison update of (X'X)^-1 and the coefficients.
    b += px * (err / f);
    p -= px * px.transpose() / f;
  }
  return w;
}

StabilityPath cusum_paths(std::span<const double> w, std::size_t k, StabilityKind kind) {
  if (w.empty()) throw Error(ErrorKind::InvalidInput, "stability path needs recursive residuals");
  const std::size_t m = w.size();  // n - k
  StabilityPath out;
  out.kind = kind;
  out.start_index = k + 1;
  out.path.resize(m);
  out.lower_bound.resize(m);
  out.upper_bound.resize(m);
  const double md = static_cast<double>(m);

  if (kind == StabilityKind::Cusum) {
    const double mean = std::accumulate(w.begin(), w.end(), 0.0) / md;
    double ss = 0.0;
    for (double v : w) ss += (v - mean) * (v - mean);
    const double sigma = m > 1 ? std::sqrt(ss / (md - 1.0)) : 0.0;
    const bool all_zero = std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; });
    if (!(sigma > 0.0) && !all_zero) {
      throw Error(ErrorKind::Degenerate, "CUSUM undefined: recursive residuals have zero spread");
    }
    double acc = 0.0;
    const double root = std::sqrt(md);
    for (std::size_t i = 0; i < m; ++i) {
      acc += w[i];
      out.path[i] = all_zero ? 0.0 : acc / sigma;
      const double r = static_cast<double>(i + 1);  // t - k
      const double line = 0.948 * (root + 2.0 * r / root);
      out.lower_bound[i] = -line;
      out.upper_bound[i] = line;
    }
  } else {
    double total = 0.0;
    for (double v : w) total += v * v;
    if (!(total > 0.0)) throw Error(ErrorKind::Degenerate, "CUSUMSQ undefined: recursive residuals are all zero");
    const auto c0 = cusumsq_c0(md / 2.0 - 1.0);
    out.extrapolated_bounds = c0.extrapolated;
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      acc += w[i] * w[i];
      out.path[i] = acc / total;
      const double line = static_cast<double>(i + 1) / md;
      out.lower_bound[i] = line - c0.c0;
      out.upper_bound[i] = line + c0.c0;
    }
    out.path.back() = 1.0;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (out.path[i] < out.lower_bound[i] || out.path[i] > out.upper_bound[i]) {
      out.stable = false;
      break;
    }
  }
  return out;
}

}  // namespace ardlkit
