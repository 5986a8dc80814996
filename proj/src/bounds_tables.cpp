// Bounds-test critical values (F statistic, unrestricted intercept, no trend).
//
// General table: Pesaran, Shin & Smith (2001), Table CI(iii), asymptotic
// values for k = 1..10 regressors.
//
// paper-table4: the four (I0, I1) pairs published alongside the USA CO2-drivers
// estimates for k = 5. They differ from the Case III row above and are kept
// verbatim so the published decision can be reproduced.

#include <array>

#include "ardlkit/ardl.hpp"

namespace ardlkit {

namespace {

struct BoundsEntry {
  double i0[4];  // 10%, 5%, 2.5%, 1%
  double i1[4];
};

constexpr std::array<BoundsEntry, 10> kCaseIII{{
    {{4.04, 4.94, 5.77, 6.84}, {4.78, 5.73, 6.68, 7.84}},  // k = 1
    {{3.17, 3.79, 4.41, 5.15}, {4.14, 4.85, 5.52, 6.36}},  // k = 2
    {{2.72, 3.23, 3.69, 4.29}, {3.77, 4.35, 4.89, 5.61}},  // k = 3
    {{2.45, 2.86, 3.25, 3.74}, {3.52, 4.01, 4.49, 5.06}},  // k = 4
    {{2.26, 2.62, 2.96, 3.41}, {3.35, 3.79, 4.18, 4.68}},  // k = 5
    {{2.12, 2.45, 2.75, 3.15}, {3.23, 3.61, 3.99, 4.43}},  // k = 6
    {{2.03, 2.32, 2.60, 2.96}, {3.13, 3.50, 3.84, 4.26}},  // k = 7
    {{1.95, 2.22, 2.48, 2.79}, {3.06, 3.39, 3.70, 4.10}},  // k = 8
    {{1.88, 2.14, 2.37, 2.65}, {2.99, 3.30, 3.60, 3.97}},  // k = 9
    {{1.83, 2.06, 2.28, 2.54}, {2.94, 3.24, 3.50, 3.86}},  // k = 10
}};

constexpr BoundsEntry kPaperK5{{2.07, 2.43, 2.81, 3.10}, {3.00, 3.27, 3.84, 4.20}};

constexpr double kLevels[4] = {0.10, 0.05, 0.025, 0.01};

}  // namespace

std::array<BoundsRow, 4> bounds_critical_values(int k, BoundsTable table) {
  const BoundsEntry* e = nullptr;
  if (table == BoundsTable::PaperTable4) {
    if (k != 5) {
      throw Error(ErrorKind::Unsupported, "paper-table4 bounds exist for k = 5 only (got k = " +
                                              std::to_string(k) + ")");
    }
    e = &kPaperK5;
  } else {
    if (k < 1 || k > static_cast<int>(kCaseIII.size())) {
      throw Error(ErrorKind::Unsupported, "bounds table covers k = 1..10 (got k = " + std::to_string(k) + ")");
    }
    e = &kCaseIII[static_cast<std::size_t>(k - 1)];
  }
  std::array<BoundsRow, 4> rows{};
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i] = {kLevels[i], e->i0[i], e->i1[i], BoundsDecision::Inconclusive};
  }
  return rows;
}

}  // namespace ardlkit
