#include "ardlkit/causality.hpp"

#include "ardlkit/distributions.hpp"
#include "ardlkit/linreg.hpp"

namespace ardlkit {

namespace {

// Rows t = first..T-1 of effect_t on [1, effect_{t-1..t-n}, (cause_{t-1..t-n})].
Eigen::MatrixXd var_design(std::span<const double> cause, std::span<const double> effect, int n,
                           std::size_t first, bool with_cause) {
  const std::size_t T = effect.size();
  const auto rows = static_cast<Eigen::Index>(T - first);
  Eigen::MatrixXd x(rows, 1 + n * (with_cause ? 2 : 1));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const std::size_t t = first + static_cast<std::size_t>(r);
    Eigen::Index c = 0;
    x(r, c++) = 1.0;
    for (int i = 1; i <= n; ++i) x(r, c++) = effect[t - static_cast<std::size_t>(i)];
    if (with_cause) {
      for (int i = 1; i <= n; ++i) x(r, c++) = cause[t - static_cast<std::size_t>(i)];
    }
  }
  return x;
}

Eigen::VectorXd response(std::span<const double> effect, std::size_t first) {
  return Eigen::Map<const Eigen::VectorXd>(effect.data() + first,
                                           static_cast<Eigen::Index>(effect.size() - first));
}

void check_lengths(std::span<const double> x, std::span<const double> y, int lags) {
  if (lags < 1) throw Error(ErrorKind::InvalidInput, "Granger test needs at least one lag");
  if (x.size() != y.size()) throw Error(ErrorKind::InvalidInput, "Granger series lengths differ");
  if (y.size() <= 2 * static_cast<std::size_t>(lags) + 2 + static_cast<std::size_t>(lags)) {
    throw Error(ErrorKind::TooShort, "sample too short for a Granger test with " + std::to_string(lags) + " lags");
  }
}

}  // namespace

int select_granger_lags(std::span<const double> x, std::span<const double> y, int max_lags) {
  check_lengths(x, y, max_lags);
  const auto first = static_cast<std::size_t>(max_lags);
  int best = 1;
  double best_score = 0.0;
  for (int n = 1; n <= max_lags; ++n) {
    const auto xy = var_design(x, y, n, first, true);
    const auto yx = var_design(y, x, n, first, true);
    const auto k = xy.cols();
    const auto rows = xy.rows();
    const double score = information_criteria(ols_rss(xy, response(y, first)), rows, k).aic +
                         information_criteria(ols_rss(yx, response(x, first)), rows, k).aic;
    if (n == 1 || score < best_score) {
      best = n;
      best_score = score;
    }
  }
  return best;
}

GrangerResult granger_pair(std::span<const double> cause, std::span<const double> effect, int lags,
                           std::string cause_name, std::string effect_name) {
  check_lengths(cause, effect, lags);
  const auto first = static_cast<std::size_t>(lags);
  const Eigen::VectorXd yv = response(effect, first);
  const double rss_u = ols_rss(var_design(cause, effect, lags, first, true), yv);
  const double rss_r = ols_rss(var_design(cause, effect, lags, first, false), yv);
  if (!(rss_u > 0.0)) throw Error(ErrorKind::Degenerate, "unrestricted Granger regression fits exactly");

  GrangerResult res;
  res.cause = std::move(cause_name);
  res.effect = std::move(effect_name);
  res.lags = lags;
  res.nobs = effect.size() - first;
  const double df2 = static_cast<double>(res.nobs) - 2.0 * lags - 1.0;
  res.f_statistic = std::max(0.0, ((rss_r - rss_u) / lags) / (rss_u / df2));
  res.p_value = dist::f_upper(res.f_statistic, lags, df2);
  res.reject_1 = res.p_value < 0.01;
  res.reject_5 = res.p_value < 0.05;
  res.reject_10 = res.p_value < 0.10;
  return res;
}

GrangerResult granger_pair(const TimeSeries& cause, const TimeSeries& effect, GrangerLags lags) {
  if (cause.start_year() != effect.start_year() || cause.size() != effect.size()) {
    throw Error(ErrorKind::InvalidInput, "Granger series are not aligned");
  }
  const int n = lags ? *lags : select_granger_lags(cause.values(), effect.values());
  return granger_pair(cause.values(), effect.values(), n, cause.name(), effect.name());
}

std::vector<GrangerResult> granger_matrix(const Dataset& data, const std::string& effect, GrangerLags lags) {
  const auto& y = data.get(effect);
  std::vector<GrangerResult> out;
  for (const auto& x : data.variables()) {
    if (x.name() == effect) continue;
    const int n = lags ? *lags : select_granger_lags(x.values(), y.values());
    out.push_back(granger_pair(x.values(), y.values(), n, x.name(), y.name()));
    out.push_back(granger_pair(y.values(), x.values(), n, y.name(), x.name()));
  }
  return out;
}

}  // namespace ardlkit
