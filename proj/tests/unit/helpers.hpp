#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ardlkit/dataio.hpp"
#include "ardlkit/rng.hpp"

namespace testutil {

inline std::vector<double> normals(std::size_t n, std::uint64_t seed) {
  ardlkit::Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

inline std::vector<double> cumsum(std::vector<double> v) {
  for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
  return v;
}

inline Eigen::VectorXd vec(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline ardlkit::Dataset dataset(std::vector<std::pair<std::string, std::vector<double>>> columns,
                                int start_year = 1) {
  std::vector<ardlkit::TimeSeries> vars;
  for (auto& [name, values] : columns) vars.emplace_back(name, start_year, std::move(values));
  return ardlkit::Dataset(std::move(vars));
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace testutil
