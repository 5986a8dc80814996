#include "ardlkit/unitroot.hpp"

#include <algorithm>
#include <cmath>

#include "ardlkit/linreg.hpp"

namespace ardlkit {

const char* to_string(UnitRootTest t) {
  switch (t) {
    case UnitRootTest::Adf: return "adf";
    case UnitRootTest::Pp: return "pp";
    case UnitRootTest::DfGls: return "dfgls";
  }
  return "adf";
}

const char* to_string(Deterministics d) {
  switch (d) {
    case Deterministics::None: return "none";
    case Deterministics::Constant: return "constant";
    case Deterministics::ConstantTrend: return "constant_trend";
  }
  return "constant";
}

std::optional<UnitRootTest> parse_unit_root_test(std::string_view text) {
  if (text == "adf") return UnitRootTest::Adf;
  if (text == "pp") return UnitRootTest::Pp;
  if (text == "dfgls" || text == "df-gls") return UnitRootTest::DfGls;
  return std::nullopt;
}

std::optional<Deterministics> parse_deterministics(std::string_view text) {
  if (text == "none" || text == "n") return Deterministics::None;
  if (text == "constant" || text == "c") return Deterministics::Constant;
  if (text == "constant_trend" || text == "ct" || text == "trend") return Deterministics::ConstantTrend;
  return std::nullopt;
}

const char* to_string(IntegrationOrder o) {
  switch (o) {
    case IntegrationOrder::I0: return "I(0)";
    case IntegrationOrder::I1: return "I(1)";
    case IntegrationOrder::I2OrHigher: return "I(2+)";
  }
  return "I(1)";
}

void UnitRootSpec::validate() const {
  if (test == UnitRootTest::DfGls && deterministics == Deterministics::None) {
    throw Error(ErrorKind::Unsupported, "DF-GLS requires deterministics constant or constant_trend");
  }
  if (lag_policy.kind != LagPolicy::Kind::Schwert && lag_policy.lags < 0) {
    throw Error(ErrorKind::InvalidInput, "lag order must be non-negative");
  }
  if (pp_bandwidth && *pp_bandwidth < 0) {
    throw Error(ErrorKind::InvalidInput, "PP bandwidth must be non-negative");
  }
}

int schwert_max_lag(std::size_t t) {
  return static_cast<int>(std::floor(12.0 * std::pow(static_cast<double>(t) / 100.0, 0.25)));
}

namespace {

// Dickey-Fuller regression  dy_t = det + gamma y_{t-1} + sum_{i<=p} phi_i dy_{t-i}
// over rows t = first..T-1 (0-based indices into y).
DesignMatrix df_design(std::span<const double> y, Deterministics det, int p, std::size_t first) {
  const std::size_t T = y.size();
  const auto n = static_cast<Eigen::Index>(T - first);
  DesignMatrix d;
  d.response = "dy";
  d.y.resize(n);
  const int det_cols = det == Deterministics::None ? 0 : (det == Deterministics::Constant ? 1 : 2);
  d.x.resize(n, det_cols + 1 + p);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = first + static_cast<std::size_t>(r);
    d.y(r) = y[t] - y[t - 1];
    Eigen::Index c = 0;
    if (det_cols >= 1) d.x(r, c++) = 1.0;
    if (det_cols == 2) d.x(r, c++) = static_cast<double>(t);
    d.x(r, c++) = y[t - 1];
    for (int i = 1; i <= p; ++i) d.x(r, c++) = y[t - i] - y[t - i - 1];
  }
  if (det_cols >= 1) d.names.push_back("const");
  if (det_cols == 2) d.names.push_back("trend");
  d.names.push_back("y(-1)");
  for (int i = 1; i <= p; ++i) d.names.push_back("dy(-" + std::to_string(i) + ")");
  return d;
}

Eigen::Index level_column(Deterministics det) {
  return det == Deterministics::None ? 0 : (det == Deterministics::Constant ? 1 : 2);
}

// Rows available for augmentation order p.
std::size_t rows_for(std::size_t T, int p) {
  return T > static_cast<std::size_t>(p) + 1 ? T - 1 - static_cast<std::size_t>(p) : 0;
}

// Lag order chosen by the policy (criterion on the common sample, smaller p on ties).
int select_lags(std::span<const double> y, Deterministics det, const LagPolicy& policy) {
  const std::size_t T = y.size();
  int pmax = policy.lags;
  if (policy.kind == LagPolicy::Kind::Schwert) {
    pmax = schwert_max_lag(T);
    const int feasible = static_cast<int>(T) - 1 - static_cast<int>(kMinUnitRootRows);
    pmax = std::max(0, std::min(pmax, feasible));
  }
  if (pmax >= static_cast<int>(T) - 5) {
    throw Error(ErrorKind::TooShort, "lag order " + std::to_string(pmax) + " >= n - 5 for n = " +
                                         std::to_string(T));
  }
  if (rows_for(T, pmax) < kMinUnitRootRows) {
    throw Error(ErrorKind::TooShort, "sample too short: " + std::to_string(rows_for(T, pmax)) +
                                         " usable rows at " + std::to_string(pmax) + " lags, need 15");
  }
  if (policy.kind == LagPolicy::Kind::Fixed) return pmax;

  const auto full = df_design(y, det, pmax, static_cast<std::size_t>(pmax) + 1);
  const Eigen::Index base = level_column(det) + 1;
  int best = 0;
  double best_ic = 0.0;
  for (int p = 0; p <= pmax; ++p) {
    const Eigen::Index k = base + p;
    const double rss = ols_rss(full.x.leftCols(k), full.y);
    const double ic = information_criteria(rss, full.rows(), k).get(policy.criterion);
    if (p == 0 || ic < best_ic) {
      best = p;
      best_ic = ic;
    }
  }
  return best;
}

std::string band_for(double stat, const CriticalValues& cv) {
  if (stat < cv.pct1) return "<0.01";
  if (stat < cv.pct5) return "0.01-0.05";
  if (stat < cv.pct10) return "0.05-0.10";
  return ">0.10";
}

std::string stars_for(double stat, const CriticalValues& cv) {
  if (stat < cv.pct1) return "***";
  if (stat < cv.pct5) return "**";
  if (stat < cv.pct10) return "*";
  return "";
}

struct AdfCore {
  double statistic;
  int lags;
  std::size_t nobs;
};

AdfCore adf_core(std::span<const double> y, Deterministics det, const LagPolicy& policy) {
  const int p = select_lags(y, det, policy);
  const auto design = df_design(y, det, p, static_cast<std::size_t>(p) + 1);
  const auto fit = ols_fit(design);
  return {fit.t_statistics(level_column(det)), p, static_cast<std::size_t>(design.rows())};
}

std::vector<double> ols_detrend(std::span<const double> y, Deterministics det) {
  const auto n = static_cast<Eigen::Index>(y.size());
  DesignMatrix d;
  d.y = Eigen::Map<const Eigen::VectorXd>(y.data(), n);
  d.x = Eigen::MatrixXd::Ones(n, 1);
  d.names = {"const"};
  if (det == Deterministics::ConstantTrend) {
    d.add_column("trend", Eigen::VectorXd::LinSpaced(n, 1.0, static_cast<double>(n)));
  }
  const auto r = ols_fit(d).residuals;
  return {r.data(), r.data() + n};
}

// GLS detrending with local-to-unity alpha = 1 + cbar / T.
std::vector<double> gls_detrend(std::span<const double> y, Deterministics det) {
  const std::size_t T = y.size();
  const bool trend = det == Deterministics::ConstantTrend;
  const double cbar = trend ? -13.5 : -7.0;
  const double alpha = 1.0 + cbar / static_cast<double>(T);
  const Eigen::Index n = static_cast<Eigen::Index>(T);
  DesignMatrix d;
  d.response = "yq";
  d.x.resize(n, trend ? 2 : 1);
  d.y.resize(n);
  for (Eigen::Index t = 0; t < n; ++t) {
    const double tt = static_cast<double>(t + 1);
    if (t == 0) {
      d.y(t) = y[0];
      d.x(t, 0) = 1.0;
      if (trend) d.x(t, 1) = 1.0;
    } else {
      d.y(t) = y[static_cast<std::size_t>(t)] - alpha * y[static_cast<std::size_t>(t) - 1];
      d.x(t, 0) = 1.0 - alpha;
      if (trend) d.x(t, 1) = tt - alpha * (tt - 1.0);
    }
  }
  d.names = trend ? std::vector<std::string>{"const", "trend"} : std::vector<std::string>{"const"};
  const auto fit = ols_fit(d);
  std::vector<double> out(T);
  for (std::size_t t = 0; t < T; ++t) {
    double det_part = fit.coefficients(0);
    if (trend) det_part += fit.coefficients(1) * static_cast<double>(t + 1);
    out[t] = y[t] - det_part;
  }
  return out;
}

}  // namespace

UnitRootResult unit_root_test(std::span<const double> y, const UnitRootSpec& spec) {
  spec.validate();
  if (y.size() < kMinUnitRootRows + 1) {
    throw Error(ErrorKind::TooShort, "sample too short for a unit-root test: " + std::to_string(y.size()) +
                                         " observations");
  }
  UnitRootResult res;
  res.test = spec.test;
  res.deterministics = spec.deterministics;

  switch (spec.test) {
    case UnitRootTest::Adf: {
      const auto core = adf_core(y, spec.deterministics, spec.lag_policy);
      res.statistic = core.statistic;
      res.lags_used = core.lags;
      res.nobs = core.nobs;
      break;
    }
    case UnitRootTest::DfGls: {
      // Lags are chosen on the OLS-detrended series (Perron-Qu); the test
      // regression runs on the GLS-detrended series.
      LagPolicy policy = spec.lag_policy;
      if (policy.kind != LagPolicy::Kind::Fixed) {
        policy = LagPolicy::fixed(select_lags(ols_detrend(y, spec.deterministics), Deterministics::None, policy));
      }
      const auto detrended = gls_detrend(y, spec.deterministics);
      const auto core = adf_core(detrended, Deterministics::None, policy);
      res.statistic = core.statistic;
      res.lags_used = core.lags;
      res.nobs = core.nobs;
      break;
    }
    case UnitRootTest::Pp: {
      const auto design = df_design(y, spec.deterministics, 0, 1);
      const auto fit = ols_fit(design);
      const Eigen::Index c = level_column(spec.deterministics);
      const double n = static_cast<double>(fit.nobs);
      const double t_stat = fit.t_statistics(c);
      const double se = fit.standard_errors(c);
      const double gamma0 = fit.rss / n;
      const auto lrv = long_run_variance(fit.residuals, spec.pp_bandwidth);
      const double lambda2 = lrv.omega(0, 0);
      if (!(lambda2 > 0.0)) {
        throw Error(ErrorKind::Degenerate, "non-positive long-run variance in Phillips-Perron correction");
      }
      const double lambda = std::sqrt(lambda2);
      res.statistic = std::sqrt(gamma0 / lambda2) * t_stat -
                      0.5 * (lambda2 - gamma0) / lambda * (n * se / fit.sigma);
      res.lags_used = lrv.bandwidth;
      res.nobs = static_cast<std::size_t>(fit.nobs);
      break;
    }
  }

  res.critical_values = unit_root_critical_values(spec.test, spec.deterministics, y.size());
  res.decision = res.statistic < res.critical_values.pct5 ? UnitRootDecision::RejectUnitRoot
                                                          : UnitRootDecision::FailToReject;
  res.p_value_band = band_for(res.statistic, res.critical_values);
  res.stars = stars_for(res.statistic, res.critical_values);
  return res;
}

UnitRootResult unit_root_test(const TimeSeries& y, const UnitRootSpec& spec) {
  return unit_root_test(std::span<const double>(y.values()), spec);
}

IntegrationOrder classify_series(std::span<const double> y, const UnitRootSpec& spec) {
  if (unit_root_test(y, spec).decision == UnitRootDecision::RejectUnitRoot) return IntegrationOrder::I0;
  std::vector<double> dy(y.size() - 1);
  for (std::size_t t = 1; t < y.size(); ++t) dy[t - 1] = y[t] - y[t - 1];
  if (unit_root_test(dy, spec).decision == UnitRootDecision::RejectUnitRoot) return IntegrationOrder::I1;
  return IntegrationOrder::I2OrHigher;
}

std::vector<IntegrationClass> classify_integration(const Dataset& data,
                                                   const std::vector<UnitRootSpec>& tests) {
  if (tests.empty()) throw Error(ErrorKind::InvalidInput, "no unit-root tests configured");
  std::vector<IntegrationClass> out;
  for (const auto& var : data.variables()) {
    IntegrationClass cls;
    cls.variable = var.name();
    const auto& y = var.values();
    std::vector<double> dy(y.size() - 1);
    for (std::size_t t = 1; t < y.size(); ++t) dy[t - 1] = y[t] - y[t - 1];
    for (const auto& spec : tests) {
      auto level = unit_root_test(y, spec);
      auto diff = unit_root_test(dy, spec);
      IntegrationOrder o = IntegrationOrder::I2OrHigher;
      if (level.decision == UnitRootDecision::RejectUnitRoot) {
        o = IntegrationOrder::I0;
      } else if (diff.decision == UnitRootDecision::RejectUnitRoot) {
        o = IntegrationOrder::I1;
      }
      cls.per_test.push_back(o);
      cls.level.push_back(std::move(level));
      cls.first_difference.push_back(std::move(diff));
    }
    auto sorted = cls.per_test;
    std::sort(sorted.begin(), sorted.end());
    cls.order = sorted[sorted.size() / 2];
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace ardlkit
