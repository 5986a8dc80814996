#include "ardlkit/ardl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ardlkit/distributions.hpp"
#include "ardlkit/kernels.hpp"

namespace ardlkit {

int ArdlOrder::total() const { return p + std::accumulate(q.begin(), q.end(), 0); }

std::string ArdlOrder::label() const {
  std::string s = "(" + std::to_string(p);
  for (int qi : q) s += ", " + std::to_string(qi);
  return s + ")";
}

const char* to_string(BoundsTable t) {
  return t == BoundsTable::PaperTable4 ? "paper-table4" : "general";
}

std::optional<BoundsTable> parse_bounds_table(std::string_view text) {
  if (text == "general") return BoundsTable::General;
  if (text == "paper-table4") return BoundsTable::PaperTable4;
  return std::nullopt;
}

const char* to_string(BoundsDecision d) {
  switch (d) {
    case BoundsDecision::Cointegrated: return "cointegrated";
    case BoundsDecision::Inconclusive: return "inconclusive";
    case BoundsDecision::NotCointegrated: return "not_cointegrated";
  }
  return "inconclusive";
}

Eigen::Index ArdlFit::dependent_level_column() const { return (intercept ? 1 : 0) + (trend ? 1 : 0); }

Eigen::Index ArdlFit::regressor_level_column(std::size_t j) const {
  return dependent_level_column() + 1 + static_cast<Eigen::Index>(j);
}

namespace {

void check_order(const ModelSpec& spec, const ArdlOrder& order) {
  if (spec.regressors.empty()) throw Error(ErrorKind::InvalidInput, "ARDL model needs at least one regressor");
  if (order.p < 1) throw Error(ErrorKind::InvalidInput, "ARDL dependent lag order p must be >= 1");
  if (order.q.size() != spec.regressors.size()) {
    throw Error(ErrorKind::InvalidInput, "ARDL order has " + std::to_string(order.q.size()) +
                                             " regressor lags for " + std::to_string(spec.regressors.size()) +
                                             " regressors");
  }
  for (int qi : order.q) {
    if (qi < 0) throw Error(ErrorKind::InvalidInput, "ARDL regressor lag orders must be >= 0");
  }
}

std::size_t min_first_row(const ArdlOrder& order) {
  int m = std::max(order.p, 1);
  for (int qi : order.q) m = std::max(m, qi);
  return static_cast<std::size_t>(m);
}

std::string lagged(const std::string& name, int i) {
  return i == 0 ? name : name + "(-" + std::to_string(i) + ")";
}

}  // namespace

DesignMatrix build_ardl_design(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order,
                               std::size_t first_row) {
  spec.validate(data);
  check_order(spec, order);
  if (first_row < min_first_row(order)) {
    throw Error(ErrorKind::InvalidInput, "ARDL sample starts before the largest lag is available");
  }
  const std::size_t T = data.length();
  if (first_row >= T) throw Error(ErrorKind::TooShort, "ARDL sample is empty");
  const auto n = static_cast<Eigen::Index>(T - first_row);
  const auto& y = data.get(spec.dependent).values();
  std::vector<const std::vector<double>*> xs;
  for (const auto& r : spec.regressors) xs.push_back(&data.get(r).values());

  DesignMatrix d;
  d.response = "D(" + spec.dependent + ")";
  d.y.resize(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t t = first_row + static_cast<std::size_t>(r);
    d.y(r) = y[t] - y[t - 1];
  }
  auto column = [&](auto&& value_at) {
    Eigen::VectorXd c(n);
    for (Eigen::Index r = 0; r < n; ++r) c(r) = value_at(first_row + static_cast<std::size_t>(r));
    return c;
  };

  if (spec.intercept) d.add_column("C", Eigen::VectorXd::Ones(n));
  if (spec.trend) d.add_column("trend", column([](std::size_t t) { return static_cast<double>(t + 1); }));
  d.add_column(lagged(spec.dependent, 1), column([&](std::size_t t) { return y[t - 1]; }));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const auto& x = *xs[j];
    const int lag = order.q[j] == 0 ? 0 : 1;
    d.add_column(lagged(spec.regressors[j], lag),
                 column([&](std::size_t t) { return x[t - static_cast<std::size_t>(lag)]; }));
  }
  for (int i = 1; i < order.p; ++i) {
    d.add_column("D(" + lagged(spec.dependent, i) + ")", column([&](std::size_t t) {
                   return y[t - static_cast<std::size_t>(i)] - y[t - static_cast<std::size_t>(i) - 1];
                 }));
  }
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const auto& x = *xs[j];
    for (int i = 0; i < order.q[j]; ++i) {
      d.add_column("D(" + lagged(spec.regressors[j], i) + ")", column([&](std::size_t t) {
                     return x[t - static_cast<std::size_t>(i)] - x[t - static_cast<std::size_t>(i) - 1];
                   }));
    }
  }
  return d;
}

namespace {

ArdlFit fit_on_sample(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order,
                      std::size_t first_row) {
  ArdlFit fit;
  fit.order = order;
  fit.dependent = spec.dependent;
  fit.regressors = spec.regressors;
  fit.intercept = spec.intercept;
  fit.trend = spec.trend;
  fit.design = build_ardl_design(data, spec, order, first_row);
  fit.levels_fit = ols_fit(fit.design);
  fit.first_row = first_row;
  fit.first_year = data.start_year() + static_cast<int>(first_row);
  fit.effective_sample = static_cast<std::size_t>(fit.design.rows());
  return fit;
}

std::vector<ArdlOrder> order_grid(int max_p, int max_q, std::size_t k) {
  std::vector<ArdlOrder> grid;
  std::vector<int> q(k, 0);
  for (int p = 1; p <= max_p; ++p) {
    std::fill(q.begin(), q.end(), 0);
    while (true) {
      grid.push_back({p, q});
      std::size_t j = 0;
      while (j < k && q[j] == max_q) q[j++] = 0;
      if (j == k) break;
      ++q[j];
    }
  }
  return grid;
}

}  // namespace

ArdlFit fit_ardl(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order) {
  check_order(spec, order);
  return fit_on_sample(data, spec, order, min_first_row(order));
}

ArdlOrder select_order(const Dataset& data, const ModelSpec& spec, int max_p, int max_q,
                       Criterion criterion) {
  spec.validate(data);
  if (max_p < 1 || max_q < 0) throw Error(ErrorKind::InvalidInput, "ARDL grid needs max_p >= 1, max_q >= 0");
  const auto grid = order_grid(max_p, max_q, spec.regressors.size());
  const std::size_t first_row = static_cast<std::size_t>(std::max({max_p, max_q, 1}));
  if (first_row >= data.length()) throw Error(ErrorKind::TooShort, "sample too short for the ARDL grid");
  const auto n_eff = static_cast<Eigen::Index>(data.length() - first_row);
  const Eigen::Index fixed_cols = (spec.intercept ? 1 : 0) + (spec.trend ? 1 : 0) + 1 +
                                  static_cast<Eigen::Index>(spec.regressors.size());

  constexpr double kInfeasible = std::numeric_limits<double>::infinity();
  const auto scores = replicate<double>(
      grid.size(),
      [&](std::size_t i) {
        const auto& o = grid[i];
        const Eigen::Index k = fixed_cols + (o.p - 1) + std::accumulate(o.q.begin(), o.q.end(), 0);
        if (k >= n_eff) return kInfeasible;
        try {
          const auto d = build_ardl_design(data, spec, o, first_row);
          const double rss = ols_rss(d.x, d.y);
          return information_criteria(rss, n_eff, k).get(criterion);
        } catch (const Error&) {
          return kInfeasible;
        }
      },
      grid.size() > 64 ? Execution::Parallel : Execution::Serial);

  std::size_t best = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (scores[i] == kInfeasible) continue;
    if (best == grid.size() || scores[i] < scores[best] ||
        (scores[i] == scores[best] && grid[i].total() < grid[best].total())) {
      best = i;
    }
  }
  if (best == grid.size()) {
    throw Error(ErrorKind::TooShort, "every ARDL candidate order is rank-deficient or exhausts the degrees of freedom");
  }
  return grid[best];
}

const BoundsRow& BoundsResult::at(double significance) const {
  for (const auto& r : rows) {
    if (std::fabs(r.significance - significance) < 1e-12) return r;
  }
  throw Error(ErrorKind::InvalidInput, "no bounds at significance " + std::to_string(significance));
}

bool BoundsResult::cointegrated_at(double significance) const {
  return at(significance).decision == BoundsDecision::Cointegrated;
}

BoundsResult bounds_decision(double f_statistic, int k, BoundsTable table) {
  BoundsResult res;
  res.f_statistic = f_statistic;
  res.k = k;
  res.table = table;
  res.case_label = "Case III: unrestricted intercept, no trend";
  res.rows = bounds_critical_values(k, table);
  for (auto& r : res.rows) {
    if (f_statistic > r.i1_bound) {
      r.decision = BoundsDecision::Cointegrated;
    } else if (f_statistic < r.i0_bound) {
      r.decision = BoundsDecision::NotCointegrated;
    } else {
      r.decision = BoundsDecision::Inconclusive;
    }
  }
  return res;
}

BoundsResult bounds_f_test(const ArdlFit& fit, BoundsTable table) {
  if (!fit.intercept || fit.trend) {
    throw Error(ErrorKind::Unsupported, "bounds tables cover the unrestricted-intercept, no-trend case only");
  }
  const auto k = fit.regressors.size();
  const Eigen::Index first = fit.dependent_level_column();
  const Eigen::Index m = static_cast<Eigen::Index>(k) + 1;
  const Eigen::VectorXd b = fit.levels_fit.coefficients.segment(first, m);
  const Eigen::MatrixXd v = fit.levels_fit.covariance.block(first, first, m, m);
  Eigen::LDLT<Eigen::MatrixXd> ldlt(v);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
      ldlt.vectorD().minCoeff() <= kRankTolerance * ldlt.vectorD().maxCoeff()) {
    throw Error(ErrorKind::RankDeficient, "levels-restriction covariance is singular");
  }
  const double f = b.dot(ldlt.solve(b)) / static_cast<double>(m);
  return bounds_decision(f, static_cast<int>(k), table);
}

std::vector<LongRunCoefficient> long_run_coefficients(const ArdlFit& fit) {
  const auto& lf = fit.levels_fit;
  const Eigen::Index iy = fit.dependent_level_column();
  const double pi_y = lf.coefficients(iy);
  if (std::fabs(pi_y) < 1e-8) {
    throw Error(ErrorKind::Degenerate, "lagged dependent level coefficient is ~0; long-run relationship undefined");
  }
  const double df = static_cast<double>(lf.df_resid);
  auto ratio = [&](Eigen::Index ix, const std::string& name) {
    const double pi_x = lf.coefficients(ix);
    LongRunCoefficient c;
    c.name = name;
    c.coefficient = -pi_x / pi_y;
    // gradient of -pi_x / pi_y with respect to (pi_x, pi_y)
    const double gx = -1.0 / pi_y;
    const double gy = pi_x / (pi_y * pi_y);
    const double var = gx * gx * lf.covariance(ix, ix) + gy * gy * lf.covariance(iy, iy) +
                       2.0 * gx * gy * lf.covariance(ix, iy);
    c.standard_error = std::sqrt(std::max(var, 0.0));
    c.t_statistic = c.coefficient / c.standard_error;
    c.p_value = dist::student_t_two_sided(c.t_statistic, df);
    return c;
  };
  std::vector<LongRunCoefficient> out;
  for (std::size_t j = 0; j < fit.regressors.size(); ++j) {
    out.push_back(ratio(fit.regressor_level_column(j), fit.regressors[j]));
  }
  if (fit.intercept) out.push_back(ratio(0, "C"));
  return out;
}

EcmFit fit_ecm(const Dataset& data, const ModelSpec& spec, const ArdlOrder& order) {
  EcmFit ecm;
  ecm.ardl = fit_ardl(data, spec, order);
  ecm.long_run = long_run_coefficients(ecm.ardl);

  const auto& levels = ecm.ardl.design;
  const Eigen::Index n = levels.rows();
  const Eigen::Index iy = ecm.ardl.dependent_level_column();
  Eigen::VectorXd ect = levels.x.col(iy);
  for (std::size_t j = 0; j < spec.regressors.size(); ++j) {
    ect -= ecm.long_run[j].coefficient * levels.x.col(ecm.ardl.regressor_level_column(j));
  }

  DesignMatrix& d = ecm.design;
  d.response = levels.response;
  d.y = levels.y;
  d.x.resize(n, 0);
  for (Eigen::Index c = 0; c < levels.cols(); ++c) {
    const bool level_term = c >= iy && c <= ecm.ardl.regressor_level_column(spec.regressors.size() - 1);
    if (!level_term) d.add_column(levels.names[static_cast<std::size_t>(c)], levels.x.col(c));
  }
  d.add_column(kEctName, ect);
  ecm.short_run = ols_fit(d);
  ecm.ect.assign(ect.data(), ect.data() + ect.size());
  const Eigen::Index ie = d.cols() - 1;
  ecm.ect_coefficient = ecm.short_run.coefficients(ie);
  ecm.ect_standard_error = ecm.short_run.standard_errors(ie);
  ecm.convergent = ecm.ect_coefficient > -2.0 && ecm.ect_coefficient < 0.0;
  return ecm;
}

}  // namespace ardlkit
