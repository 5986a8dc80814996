#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ardlkit/dataio.hpp"
#include "ardlkit/linreg.hpp"

namespace ardlkit {

enum class UnitRootTest { Adf, Pp, DfGls };
enum class Deterministics { None, Constant, ConstantTrend };

const char* to_string(UnitRootTest t);
const char* to_string(Deterministics d);
std::optional<UnitRootTest> parse_unit_root_test(std::string_view text);
std::optional<Deterministics> parse_deterministics(std::string_view text);

/// Augmentation-lag choice for ADF and DF-GLS.
struct LagPolicy {
  enum class Kind { Fixed, AicMax, Schwert };
  Kind kind = Kind::Schwert;
  int lags = 0;  // p for Fixed, pmax for AicMax
  Criterion criterion = Criterion::Aic;  // used by the searching policies

  static LagPolicy fixed(int p) { return {Kind::Fixed, p, Criterion::Aic}; }
  static LagPolicy aic_max(int pmax) { return {Kind::AicMax, pmax, Criterion::Aic}; }
  /// Criterion search over [0, floor(12 (T/100)^(1/4))], clamped to keep 15 usable rows.
  static LagPolicy schwert() { return {Kind::Schwert, 0, Criterion::Aic}; }

  LagPolicy with(Criterion c) const {
    LagPolicy p = *this;
    p.criterion = c;
    return p;
  }
};

struct UnitRootSpec {
  UnitRootTest test = UnitRootTest::Adf;
  Deterministics deterministics = Deterministics::Constant;
  LagPolicy lag_policy = LagPolicy::schwert();
  std::optional<int> pp_bandwidth;  // nullopt: automatic Bartlett bandwidth

  void validate() const;
};

/// Critical values at 1%, 5%, 10% (left tail).
struct CriticalValues {
  double pct1 = 0.0;
  double pct5 = 0.0;
  double pct10 = 0.0;
};

enum class UnitRootDecision { RejectUnitRoot, FailToReject };

struct UnitRootResult {
  UnitRootTest test = UnitRootTest::Adf;
  Deterministics deterministics = Deterministics::Constant;
  double statistic = 0.0;
  int lags_used = 0;       // augmentation lags (ADF, DF-GLS) or bandwidth (PP)
  std::size_t nobs = 0;    // rows in the test regression
  CriticalValues critical_values;
  std::string p_value_band;  // "<0.01", "0.01-0.05", "0.05-0.10", ">0.10"
  UnitRootDecision decision = UnitRootDecision::FailToReject;
  /// Stars as printed in unit-root tables: *** 1%, ** 5%, * 10%.
  std::string stars;
};

/// Minimum number of rows in the test regression.
inline constexpr std::size_t kMinUnitRootRows = 15;

int schwert_max_lag(std::size_t t);

UnitRootResult unit_root_test(std::span<const double> y, const UnitRootSpec& spec);
UnitRootResult unit_root_test(const TimeSeries& y, const UnitRootSpec& spec);

/// Embedded finite-sample critical values, linearly interpolated in 1/n.
/// `n` is the series length. Throws Unsupported for DF-GLS without deterministics
/// and TooShort for n < 15.
CriticalValues unit_root_critical_values(UnitRootTest test, Deterministics det, std::size_t n);

enum class IntegrationOrder { I0, I1, I2OrHigher };
const char* to_string(IntegrationOrder o);

struct IntegrationClass {
  std::string variable;
  IntegrationOrder order = IntegrationOrder::I1;
  /// Per-test verdicts and the level / first-difference results they came from.
  std::vector<IntegrationOrder> per_test;
  std::vector<UnitRootResult> level;
  std::vector<UnitRootResult> first_difference;
};

/// Classifies every variable with each spec in `tests`: I0 if the level test
/// rejects, else I1 if the first-difference test rejects, else I2_or_higher.
/// The overall order is the median of the per-test orders.
std::vector<IntegrationClass> classify_integration(const Dataset& data,
                                                   const std::vector<UnitRootSpec>& tests);

/// Single-test classification of one series.
IntegrationOrder classify_series(std::span<const double> y, const UnitRootSpec& spec);

}  // namespace ardlkit
