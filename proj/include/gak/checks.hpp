#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gak {

struct PropertyResult {
  std::string algebra;
  std::string property;
  double tolerance = 0.0;
  double max_residual = 0.0;
  long samples = 0;
  long failures = 0;  // unexpected errors or verdict mismatches

  bool pass() const { return failures == 0 && max_residual <= tolerance; }
};

struct CheckReport {
  std::string suite;
  std::uint64_t seed = 0;
  long count = 0;
  long rejected = 0;
  std::vector<PropertyResult> properties;

  bool pass() const;
  std::string format() const;
};

// Suites: rotor, roundtrip, split, ortho4, kernels. count is per algebra.
// Throws invalid_argument for an unknown suite.
CheckReport run_check(std::string_view suite, std::uint64_t seed, long count);

const std::vector<std::string>& check_suites();

}  // namespace gak
