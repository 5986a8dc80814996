#include "ardlkit/kernels.hpp"

#include <omp.h>

namespace ardlkit {

int parallel_workers() { return omp_get_max_threads(); }

namespace {

Eigen::MatrixXd lag_product(const Eigen::MatrixXd& u, Eigen::Index j) {
  const Eigen::Index n = u.rows();
  // sum_t u_t u_{t-j}' with rows as time: U[j:]' U[:n-j]
  return u.bottomRows(n - j).transpose() * u.topRows(n - j) / static_cast<double>(n);
}

}  // namespace

std::vector<Eigen::MatrixXd> autocovariances(const Eigen::MatrixXd& u, int max_lag, Execution exec) {
  std::vector<Eigen::MatrixXd> gammas(static_cast<std::size_t>(max_lag) + 1);
  if (exec == Execution::Serial) {
    for (int j = 0; j <= max_lag; ++j) gammas[static_cast<std::size_t>(j)] = lag_product(u, j);
    return gammas;
  }
#pragma omp parallel for schedule(static)
  for (int j = 0; j <= max_lag; ++j) gammas[static_cast<std::size_t>(j)] = lag_product(u, j);
  return gammas;
}

}  // namespace ardlkit
