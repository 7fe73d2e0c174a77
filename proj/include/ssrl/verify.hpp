#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ssrl {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

/// Suites: thm1, prop1, prop2, cross, sigma, noise-means, all.
std::vector<CheckResult> run_verify_suite(const std::string& suite, std::size_t instances, std::uint64_t seed);

}  // namespace ssrl
