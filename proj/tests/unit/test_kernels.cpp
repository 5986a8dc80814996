#include "doctest.h"
#include "helpers.hpp"

#include "ardlkit/kernels.hpp"
#include "ardlkit/rng.hpp"

using namespace ardlkit;

TEST_SUITE("kernels") {
  TEST_CASE("serial and parallel autocovariances are identical") {
    Eigen::MatrixXd u(300, 4);
    const auto z = testutil::normals(1200, 17);
    for (int i = 0; i < 300; ++i)
      for (int j = 0; j < 4; ++j) u(i, j) = z[static_cast<std::size_t>(4 * i + j)];
    const auto a = autocovariances(u, 12, Execution::Serial);
    const auto b = autocovariances(u, 12, Execution::Parallel);
    REQUIRE(a.size() == 13);
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == b[j]);
    double g1 = 0.0;
    for (int t = 1; t < 300; ++t) g1 += u(t, 2) * u(t - 1, 0);
    CHECK(a[1](2, 0) == doctest::Approx(g1 / 300.0).epsilon(1e-14));
  }

  TEST_CASE("replicate orders results by index regardless of execution") {
    auto fn = [](std::size_t i) { return Rng(replication_seed(7, i)).normal(); };
    CHECK(replicate<double>(500, fn, Execution::Serial) == replicate<double>(500, fn, Execution::Parallel));
  }

  TEST_CASE("replicate rethrows a work-item failure") {
    auto fn = [](std::size_t i) -> int {
      if (i == 37) throw std::runtime_error("boom");
      return static_cast<int>(i);
    };
    CHECK_THROWS_AS(replicate<int>(100, fn, Execution::Parallel), std::runtime_error);
  }

  TEST_CASE("seed splitting is a pure function") {
    CHECK(replication_seed(1, 0) == replication_seed(1, 0));
    CHECK(replication_seed(1, 0) != replication_seed(1, 1));
    CHECK(replication_seed(1, 0) != replication_seed(2, 0));
    CHECK(replication_seed(5, 3) == mix64(5 + 0x9E3779B97F4A7C15ULL * 4));
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
  }
}
