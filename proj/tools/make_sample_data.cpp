// Writes a synthetic annual panel (1990-2021) shaped like the USA emissions data:
// five I(1) drivers with drift, stationary urbanization, and CO2 tied to them by
// an error-correction mechanism. Usage: make_sample_data [seed] > data.csv
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "ardlkit/rng.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20240611ULL;
  ardlkit::Rng rng(seed);
  constexpr int kYears = 32;
  constexpr int kFirst = 1990;

  struct Walk {
    double start, drift, sd;
  };
  const Walk gdp{10.08, 0.035, 0.02}, ai{6.30, 0.11, 0.10}, enu{3.95, 0.040, 0.06}, fdi{2.45, 0.012, 0.05};
  auto walk = [&](const Walk& w) {
    std::vector<double> v(kYears);
    v[0] = w.start;
    for (int t = 1; t < kYears; ++t) v[t] = v[t - 1] + w.drift + w.sd * rng.normal();
    return v;
  };
  const auto lgdp = walk(gdp), lai = walk(ai), lenu = walk(enu), lfdi = walk(fdi);

  std::vector<double> lurb(kYears);
  double dev = 0.0;
  for (int t = 0; t < kYears; ++t) {
    dev = 0.2 * dev + 0.08 * rng.normal();
    lurb[t] = 19.5 + dev;
  }

  const double b_gdp = 0.25, b_ai = -0.03, b_enu = 0.12, b_fdi = -0.10, b_urb = 0.30;
  std::vector<double> target(kYears);
  for (int t = 0; t < kYears; ++t)
    target[t] = b_gdp * lgdp[t] + b_ai * lai[t] + b_enu * lenu[t] + b_fdi * lfdi[t] + b_urb * lurb[t];
  const double shift = 15.464 - std::accumulate(target.begin(), target.end(), 0.0) / kYears;
  for (double& v : target) v += shift;

  std::vector<double> lco2(kYears);
  lco2[0] = target[0];
  for (int t = 1; t < kYears; ++t) {
    const double gap = lco2[t - 1] - target[t - 1];
    lco2[t] = lco2[t - 1] - 0.7 * gap + 0.5 * (target[t] - target[t - 1]) + 0.008 * rng.normal();
  }

  std::printf("year,CO2,GDP,AI,ENU,FDI,URB\n");
  for (int t = 0; t < kYears; ++t)
    std::printf("%d,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", kFirst + t, std::exp(lco2[t]), std::exp(lgdp[t]),
                std::exp(lai[t]), std::exp(lenu[t]), std::exp(lfdi[t]), std::exp(lurb[t]));
}
