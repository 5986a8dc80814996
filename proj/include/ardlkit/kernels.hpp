#pragma once

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path; both produce bit-identical results because work items are
// independent and merged in index order.

#include <Eigen/Dense>
#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

namespace ardlkit {

enum class Execution { Serial, Parallel };

/// Number of OpenMP threads a Parallel kernel would use.
int parallel_workers();

/// Gamma_j = (1/n) sum_{t=j+1..n} u_t u_{t-j}' for j = 0..max_lag.
std::vector<Eigen::MatrixXd> autocovariances(const Eigen::MatrixXd& u, int max_lag,
                                             Execution exec = Execution::Serial);

/// Calls fn(i) for i in [0, count) and returns the results ordered by i.
/// The first exception thrown by any work item is rethrown after the loop.
template <class T, class Fn>
std::vector<T> replicate(std::size_t count, Fn&& fn, Execution exec = Execution::Parallel) {
  std::vector<T> out(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ardlkit
