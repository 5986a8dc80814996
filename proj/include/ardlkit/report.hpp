#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ardlkit/ardl.hpp"
#include "ardlkit/causality.hpp"
#include "ardlkit/coint.hpp"
#include "ardlkit/dataio.hpp"
#include "ardlkit/diagnostics.hpp"
#include "ardlkit/montecarlo.hpp"
#include "ardlkit/unitroot.hpp"

namespace ardlkit::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kStarLegend = "*** p<0.01, ** p<0.05, * p<0.1";

/// "***" for p < 0.01, "**" for p < 0.05, "*" for p < 0.1, else "".
std::string stars(double p_value);

/// Fixed-point text; NaN renders as "NA" and negative zero as zero.
std::string fixed(double value, int decimals);
std::string coefficient_text(double v);  // 3 decimals
std::string p_value_text(double p);      // 4 decimals
std::string statistic_text(double v);    // 4 decimals

struct CoefficientRow {
  std::string name;
  double coefficient = 0.0;
  double standard_error = 0.0;
  double t_statistic = 0.0;
  double p_value = 1.0;
};

std::vector<CoefficientRow> rows_of(const RegressionFit& fit);
std::vector<CoefficientRow> rows_of(const std::vector<LongRunCoefficient>& long_run);
std::vector<CoefficientRow> rows_of(const CointFit& fit);

struct RobustnessColumn {
  std::string label;  // FMOLS, DOLS, CCR
  std::vector<CoefficientRow> rows;
};

std::string summary_table(const SummaryStats& stats);
std::string unit_root_table(const std::vector<IntegrationClass>& classes);
std::string bounds_table(const BoundsResult& bounds);
/// Long-run block followed by the short-run block; the error-correction row
/// is labelled "CointEq(-1)*".
std::string ardl_table(const std::vector<CoefficientRow>& long_run, const std::vector<CoefficientRow>& short_run);
std::string robustness_table(const std::vector<RobustnessColumn>& columns);
std::string granger_table(const std::vector<GrangerResult>& results);
std::string diagnostics_table(const DiagnosticReport& report);

Json to_json(const SummaryStats& stats);
Json to_json(const UnitRootResult& r);
Json to_json(const std::vector<IntegrationClass>& classes);
Json to_json(const BoundsResult& bounds);
Json to_json(const CoefficientRow& row);
Json to_json(const std::vector<CoefficientRow>& rows);
Json to_json(const EcmFit& ecm);
Json to_json(const CointFit& fit);
Json to_json(const std::vector<GrangerResult>& results);
Json to_json(const TestStatistic& t);
Json to_json(const DiagnosticReport& report);
Json to_json(const StabilityPath& path);
/// wall_time_seconds is omitted unless requested, so reports compare byte-for-byte.
Json to_json(const SimReport& report, bool include_wall_time = false);

/// One-line human summary of a simulation report.
std::string summary_line(const SimReport& report);

}  // namespace ardlkit::report
