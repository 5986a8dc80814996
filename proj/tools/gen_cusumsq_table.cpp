// Prints the embedded CUSUM-of-squares c0 table (src/cusumsq_table.cpp body).
#include <cstdio>

#include "durbin_exact.hpp"

int main() {
  constexpr int kMax = 100;
  std::printf("// n' = 1..%d, one-sided alpha = 0.025 (5%% two-sided bounds)\n", kMax);
  for (int np = 1; np <= kMax; ++np) {
    std::printf("    %.5f,%s", ardlkit::durbin::critical_value(np, 0.025), np % 8 == 0 ? "\n" : "");
  }
  std::printf("\n");
}
