#pragma once

// Exact one-sided critical value of the CUSUM-of-squares statistic.
//
// With m = n - k recursive residuals and n' = m/2 - 1, the path evaluated at
// even points behaves like n' uniform order statistics, and c0 solves
// P(max_j (U_(j) - j/(n'+1)) >= c0) = alpha. The crossing probability for
// upper boundaries b_j uses the recursion
//   F_0 = 1,  F_k = 1 - sum_{i<k} C(k, i) F_i (1 - b_{i+1})^(k-i).

#include <algorithm>
#include <cmath>
#include <vector>

namespace ardlkit::durbin {

inline long double non_crossing(int np, long double c) {
  std::vector<long double> b(static_cast<std::size_t>(np) + 1);
  for (int j = 1; j <= np; ++j) {
    b[static_cast<std::size_t>(j)] = std::min<long double>(1.0L, static_cast<long double>(j) / (np + 1) + c);
  }
  std::vector<long double> f(static_cast<std::size_t>(np) + 1);
  f[0] = 1.0L;
  for (int k = 1; k <= np; ++k) {
    long double sum = 0.0L;
    long double binom = 1.0L;  // C(k, i)
    for (int i = 0; i < k; ++i) {
      sum += binom * f[static_cast<std::size_t>(i)] *
             std::pow(1.0L - b[static_cast<std::size_t>(i) + 1], static_cast<long double>(k - i));
      binom = binom * static_cast<long double>(k - i) / static_cast<long double>(i + 1);
    }
    f[static_cast<std::size_t>(k)] = 1.0L - sum;
  }
  return f[static_cast<std::size_t>(np)];
}

inline double critical_value(int np, double alpha) {
  long double lo = 0.0L, hi = 1.0L;
  for (int it = 0; it < 200; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (1.0L - non_crossing(np, mid) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace ardlkit::durbin
