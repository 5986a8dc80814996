#include "ardlkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ardlkit::report {

namespace {

using Row = std::vector<std::string>;

std::string markdown(const Row& header, const std::vector<Row>& rows) {
  std::ostringstream out;
  auto line = [&out](const Row& cells) {
    out << '|';
    for (const auto& c : cells) out << ' ' << c << " |";
    out << '\n';
  };
  line(header);
  out << '|';
  for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string percent(double significance) {
  const double pct = significance * 100.0;
  if (std::abs(pct - std::round(pct)) < 1e-9) return fixed(pct, 0) + "%";
  return fixed(pct, 1) + "%";
}

std::string display_name(const std::string& name) { return name == kEctName ? name + "*" : name; }

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

std::string stars(double p) {
  if (p < 0.01) return "***";
  if (p < 0.05) return "**";
  if (p < 0.1) return "*";
  return "";
}

std::string fixed(double value, int decimals) {
  if (std::isnan(value)) return "NA";
  if (std::isinf(value)) return value > 0 ? "Inf" : "-Inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string coefficient_text(double v) { return fixed(v, 3); }
std::string p_value_text(double p) { return fixed(p, 4); }
std::string statistic_text(double v) { return fixed(v, 4); }

std::vector<CoefficientRow> rows_of(const RegressionFit& fit) {
  std::vector<CoefficientRow> rows;
  for (std::size_t i = 0; i < fit.names.size(); ++i) {
    const auto j = static_cast<Eigen::Index>(i);
    rows.push_back({fit.names[i], fit.coefficients(j), fit.standard_errors(j), fit.t_statistics(j), fit.p_values(j)});
  }
  return rows;
}

std::vector<CoefficientRow> rows_of(const std::vector<LongRunCoefficient>& long_run) {
  std::vector<CoefficientRow> rows;
  for (const auto& c : long_run) rows.push_back({c.name, c.coefficient, c.standard_error, c.t_statistic, c.p_value});
  return rows;
}

std::vector<CoefficientRow> rows_of(const CointFit& fit) {
  std::vector<CoefficientRow> rows;
  // Intercept last, as in the long-run tables.
  for (std::size_t pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < fit.names.size(); ++i) {
      if ((fit.names[i] == "C") != (pass == 1)) continue;
      const auto j = static_cast<Eigen::Index>(i);
      rows.push_back({fit.names[i], fit.coefficients(j), fit.standard_errors(j), fit.t_statistics(j), fit.p_values(j)});
    }
  return rows;
}

std::string summary_table(const SummaryStats& stats) {
  std::vector<Row> rows;
  for (const auto& v : stats.rows)
    rows.push_back({v.name, std::to_string(v.count), fixed(v.mean, 3), fixed(v.std_dev, 3), fixed(v.min, 3),
                    fixed(v.max, 3)});
  return "### Summary Statistics\n\n" + markdown({"Variable", "Obs", "Mean", "Std. Dev.", "Min", "Max"}, rows);
}

std::string unit_root_table(const std::vector<IntegrationClass>& classes) {
  Row header{"Variables"};
  Row sub{""};
  if (!classes.empty())
    for (const auto& r : classes.front().level) {
      const std::string name = r.test == UnitRootTest::Adf ? "ADF" : (r.test == UnitRootTest::Pp ? "P-P" : "DF-GLS");
      header.push_back(name + " I(0)");
      header.push_back(name + " I(1)");
    }
  header.push_back("Decision");
  std::vector<Row> rows;
  for (const auto& c : classes) {
    Row row{c.variable};
    for (std::size_t i = 0; i < c.level.size(); ++i) {
      row.push_back(fixed(c.level[i].statistic, 3) + c.level[i].stars);
      row.push_back(fixed(c.first_difference[i].statistic, 3) + c.first_difference[i].stars);
    }
    row.push_back(to_string(c.order));
    rows.push_back(std::move(row));
  }
  return "### Results of unit root test\n\n" + markdown(header, rows) + "\n" + kStarLegend + "\n";
}

std::string bounds_table(const BoundsResult& b) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    const auto& r = b.rows[i];
    Row row;
    if (i == 0) row = {"F-statistic", statistic_text(b.f_statistic)};
    else if (i == 1) row = {"k", std::to_string(b.k)};
    else row = {"", ""};
    row.push_back(percent(r.significance));
    row.push_back(fixed(r.i0_bound, 2));
    row.push_back(fixed(r.i1_bound, 2));
    rows.push_back(std::move(row));
  }
  std::string out = "### Results of ARDL bound test\n\n" +
                    markdown({"Test Statistic", "Value", "Signif.", "I(0)", "I(1)"}, rows) + "\n";
  out += std::string("Case: ") + b.case_label + "; critical values: " + to_string(b.table) + "\n\n";
  for (const auto& r : b.rows) out += "- " + percent(r.significance) + ": " + to_string(r.decision) + "\n";
  return out;
}

std::string ardl_table(const std::vector<CoefficientRow>& long_run, const std::vector<CoefficientRow>& short_run) {
  std::vector<Row> rows;
  auto block = [&rows](const char* title, const std::vector<CoefficientRow>& block_rows) {
    rows.push_back({std::string("**") + title + "**", "", "", "", ""});
    for (const auto& r : block_rows)
      rows.push_back({display_name(r.name), coefficient_text(r.coefficient) + stars(r.p_value),
                      statistic_text(r.standard_error), statistic_text(r.t_statistic), p_value_text(r.p_value)});
  };
  block("Long-run Estimation", long_run);
  block("Short-run Estimation", short_run);
  return "### Results of ARDL short-run and Long-run\n\n" +
         markdown({"Variable", "Coefficient", "Std. Error", "t-Statistic", "Prob."}, rows) + "\n" + kStarLegend +
         "\n";
}

std::string robustness_table(const std::vector<RobustnessColumn>& columns) {
  Row header{"Variables"};
  std::vector<std::string> names;
  for (const auto& col : columns) {
    header.push_back(col.label);
    for (const auto& r : col.rows)
      if (std::find(names.begin(), names.end(), r.name) == names.end()) names.push_back(r.name);
  }
  std::vector<Row> rows;
  for (const auto& name : names) {
    Row coef{name}, se{""};
    for (const auto& col : columns) {
      const auto it = std::find_if(col.rows.begin(), col.rows.end(), [&](const auto& r) { return r.name == name; });
      if (it == col.rows.end()) {
        coef.emplace_back("");
        se.emplace_back("");
      } else {
        coef.push_back(coefficient_text(it->coefficient) + stars(it->p_value));
        se.push_back("(" + fixed(it->standard_error, 3) + ")");
      }
    }
    rows.push_back(std::move(coef));
    rows.push_back(std::move(se));
  }
  return "### Results of Robustness check\n\n" + markdown(header, rows) + "\nStandard errors in parentheses\n" +
         kStarLegend + "\n";
}

std::string granger_table(const std::vector<GrangerResult>& results) {
  std::string out = "### Results of Pairwise Granger Causality test\n\n";
  if (results.empty()) return out + "no pairs configured\n";
  std::vector<Row> rows;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    const bool reverse_of_previous =
        i > 0 && results[i - 1].cause == r.effect && results[i - 1].effect == r.cause;
    rows.push_back({r.cause + " ≠> " + r.effect, reverse_of_previous ? "" : std::to_string(r.nobs),
                    statistic_text(r.f_statistic), p_value_text(r.p_value)});
  }
  out += markdown({"Null Hypothesis", "Obs", "F-Statistic", "Prob."}, rows);
  const bool uniform = std::all_of(results.begin(), results.end(),
                                   [&](const GrangerResult& r) { return r.lags == results.front().lags; });
  if (uniform) {
    out += "\nLags: " + std::to_string(results.front().lags) + "\n";
  } else {
    out += "\nLags by row:";
    for (std::size_t i = 0; i < results.size(); ++i) out += (i ? ", " : " ") + std::to_string(results[i].lags);
    out += "\n";
  }
  return out;
}

std::string diagnostics_table(const DiagnosticReport& d) {
  const std::vector<Row> rows{
      {"Jarque-Bera test", statistic_text(d.jb.statistic), p_value_text(d.jb.p_value), jb_decision_text(d.jb.p_value)},
      {"Lagrange Multiplier test", statistic_text(d.lm.statistic), p_value_text(d.lm.p_value),
       lm_decision_text(d.lm.p_value)},
      {"Breusch-Pagan-Godfrey test", statistic_text(d.bpg.statistic), p_value_text(d.bpg.p_value),
       bpg_decision_text(d.bpg.p_value)}};
  return "### The results of diagnostic tests\n\n" +
         markdown({"Diagnostic tests", "Coefficient", "p-value", "Decision"}, rows);
}

Json to_json(const SummaryStats& stats) {
  Json out = Json::array();
  for (const auto& v : stats.rows)
    out.push_back({{"variable", v.name},
                   {"obs", v.count},
                   {"mean", number(v.mean)},
                   {"std_dev", number(v.std_dev)},
                   {"min", number(v.min)},
                   {"max", number(v.max)}});
  return out;
}

Json to_json(const UnitRootResult& r) {
  return {{"test", to_string(r.test)},
          {"deterministics", to_string(r.deterministics)},
          {"statistic", number(r.statistic)},
          {"lags_used", r.lags_used},
          {"nobs", r.nobs},
          {"critical_values",
           {{"1%", number(r.critical_values.pct1)},
            {"5%", number(r.critical_values.pct5)},
            {"10%", number(r.critical_values.pct10)}}},
          {"p_value_band", r.p_value_band},
          {"decision", r.decision == UnitRootDecision::RejectUnitRoot ? "reject_unit_root" : "fail_to_reject"},
          {"stars", r.stars}};
}

Json to_json(const std::vector<IntegrationClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes) {
    Json level = Json::array(), diff = Json::array(), per = Json::array();
    for (const auto& r : c.level) level.push_back(to_json(r));
    for (const auto& r : c.first_difference) diff.push_back(to_json(r));
    for (auto o : c.per_test) per.push_back(to_string(o));
    out.push_back({{"variable", c.variable},
                   {"order", to_string(c.order)},
                   {"per_test", per},
                   {"level", level},
                   {"first_difference", diff}});
  }
  return out;
}

Json to_json(const BoundsResult& b) {
  Json rows = Json::array();
  for (const auto& r : b.rows)
    rows.push_back({{"significance", r.significance},
                    {"i0", r.i0_bound},
                    {"i1", r.i1_bound},
                    {"decision", to_string(r.decision)}});
  return {{"f_statistic", number(b.f_statistic)},
          {"k", b.k},
          {"case", b.case_label},
          {"table", to_string(b.table)},
          {"bounds", rows}};
}

Json to_json(const CoefficientRow& r) {
  return {{"name", r.name},
          {"coefficient", number(r.coefficient)},
          {"std_error", number(r.standard_error)},
          {"t_statistic", number(r.t_statistic)},
          {"p_value", number(r.p_value)}};
}

Json to_json(const std::vector<CoefficientRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

Json to_json(const EcmFit& ecm) {
  return {{"order", ecm.ardl.order.label()},
          {"effective_sample", ecm.ardl.effective_sample},
          {"first_year", ecm.ardl.first_year},
          {"levels", to_json(rows_of(ecm.ardl.levels_fit))},
          {"long_run", to_json(rows_of(ecm.long_run))},
          {"short_run", to_json(rows_of(ecm.short_run))},
          {"ect_coefficient", number(ecm.ect_coefficient)},
          {"ect_std_error", number(ecm.ect_standard_error)},
          {"convergent", ecm.convergent},
          {"r_squared", number(ecm.short_run.r_squared)},
          {"sigma", number(ecm.short_run.sigma)}};
}

Json to_json(const CointFit& fit) {
  return {{"method", to_string(fit.method)},
          {"effective_sample", fit.effective_sample},
          {"bandwidth", fit.bandwidth},
          {"leads_lags", fit.leads_lags},
          {"long_run_sigma2", number(fit.long_run_sigma2)},
          {"coefficients", to_json(rows_of(fit))}};
}

Json to_json(const std::vector<GrangerResult>& results) {
  Json out = Json::array();
  for (const auto& r : results)
    out.push_back({{"cause", r.cause},
                   {"effect", r.effect},
                   {"lags", r.lags},
                   {"obs", r.nobs},
                   {"f_statistic", number(r.f_statistic)},
                   {"p_value", number(r.p_value)},
                   {"reject_1", r.reject_1},
                   {"reject_5", r.reject_5},
                   {"reject_10", r.reject_10}});
  return out;
}

Json to_json(const TestStatistic& t) {
  return {{"statistic", number(t.statistic)}, {"p_value", number(t.p_value)}, {"df", t.df}, {"pass", t.pass}};
}

Json to_json(const DiagnosticReport& d) {
  Json jb = to_json(d.jb), lm = to_json(d.lm), bpg = to_json(d.bpg);
  jb["decision"] = jb_decision_text(d.jb.p_value);
  lm["decision"] = lm_decision_text(d.lm.p_value);
  lm["order"] = d.lm_order;
  bpg["decision"] = bpg_decision_text(d.bpg.p_value);
  return {{"jarque_bera", jb}, {"serial_correlation_lm", lm}, {"breusch_pagan_godfrey", bpg}};
}

Json to_json(const StabilityPath& p) {
  auto arr = [](const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(number(x));
    return a;
  };
  return {{"kind", to_string(p.kind)},
          {"start_index", p.start_index},
          {"path", arr(p.path)},
          {"lower_bound", arr(p.lower_bound)},
          {"upper_bound", arr(p.upper_bound)},
          {"stable", p.stable},
          {"extrapolated_bounds", p.extrapolated_bounds}};
}

Json to_json(const SimReport& r, bool include_wall_time) {
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = number(v);
  Json out{{"experiment", r.experiment},
           {"replications", r.replications},
           {"metric", r.metric},
           {"values", values},
           {"seed", r.seed}};
  if (include_wall_time) out["wall_time_seconds"] = r.wall_time_seconds;
  return out;
}

std::string summary_line(const SimReport& r) {
  std::ostringstream out;
  out << r.experiment << ":";
  for (const auto& [k, v] : r.values) out << ' ' << k << '=' << fixed(v, 4);
  out << " (reps=" << r.replications << ", seed=" << r.seed << ", " << fixed(r.wall_time_seconds, 2) << " s)";
  return out.str();
}

}  // namespace ardlkit::report
