// Brown-Durbin-Evans CUSUM-of-squares bound c0 for 5% two-sided lines
// (one-sided 0.025), indexed by n' = (n - k)/2 - 1 = 1..100. Reproduces
// Durbin (1969) and is regenerated exactly by tools/gen_cusumsq_table.

#include <array>
#include <cmath>

#include "ardlkit/diagnostics.hpp"

namespace ardlkit {

namespace {

constexpr std::array<double, 100> kC0 = {
    0.47500,    0.50855,    0.46702,    0.44641,    0.42174,    0.40045,    0.38294,    0.36697,
    0.35277,    0.34022,    0.32894,    0.31869,    0.30935,    0.30081,    0.29296,    0.28570,
    0.27897,    0.27270,    0.26685,    0.26137,    0.25622,    0.25136,    0.24679,    0.24245,
    0.23835,    0.23445,    0.23074,    0.22721,    0.22383,    0.22061,    0.21752,    0.21457,
    0.21173,    0.20901,    0.20639,    0.20387,    0.20144,    0.19910,    0.19684,    0.19465,
    0.19254,    0.19050,    0.18852,    0.18661,    0.18475,    0.18295,    0.18120,    0.17950,
    0.17785,    0.17624,    0.17468,    0.17316,    0.17168,    0.17024,    0.16884,    0.16746,
    0.16613,    0.16482,    0.16355,    0.16230,    0.16109,    0.15990,    0.15874,    0.15760,
    0.15649,    0.15540,    0.15433,    0.15329,    0.15227,    0.15127,    0.15028,    0.14932,
    0.14838,    0.14745,    0.14654,    0.14565,    0.14478,    0.14392,    0.14307,    0.14224,
    0.14143,    0.14063,    0.13984,    0.13907,    0.13831,    0.13756,    0.13682,    0.13610,
    0.13538,    0.13468,    0.13399,    0.13331,    0.13264,    0.13198,    0.13133,    0.13070,
    0.13006,    0.12944,    0.12883,    0.12823,
};

}  // namespace

CusumsqBound cusumsq_c0(double n_prime) {
  if (n_prime < 1.0) {
    throw Error(ErrorKind::TooShort, "CUSUMSQ bounds need at least 4 recursive residuals");
  }
  const double top = static_cast<double>(kC0.size());
  if (n_prime > top) {
    // Beyond the table the bound shrinks like 1/sqrt(n').
    return {kC0.back() * std::sqrt(top / n_prime), true};
  }
  const auto lo = static_cast<std::size_t>(std::floor(n_prime));
  const double frac = n_prime - static_cast<double>(lo);
  if (lo >= kC0.size()) return {kC0.back(), false};
  const double a = kC0[lo - 1];
  const double b = frac > 0.0 ? kC0[lo] : a;
  return {a + frac * (b - a), false};
}

}  // namespace ardlkit
