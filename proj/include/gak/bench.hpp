#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gak/op_count.hpp"

namespace gak {

struct BenchResult {
  std::string op;
  std::string algebra;
  long iterations = 0;
  double fast_ns = 0.0;     // per call
  double generic_ns = 0.0;  // per call

  double speedup() const { return fast_ns > 0.0 ? generic_ns / fast_ns : 0.0; }
};

// op: normalize or sqrt on r31, r301, r4, r41; log or exp on r301.
// Throws invalid_argument for other pairs.
BenchResult run_bench(std::string_view op, std::string_view algebra, long iterations,
                      std::uint64_t seed = 1);

// Arithmetic performed by one call of the kernel on a generic input
// (no shortcut branch taken).
OpCounts count_kernel_ops(std::string_view op, std::string_view algebra);

// Field order used when printing the counts of op.
std::vector<std::string> op_count_order(std::string_view op);

}  // namespace gak
