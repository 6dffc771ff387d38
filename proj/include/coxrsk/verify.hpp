#pragma once

// Invariant battery behind `coxrsk verify`.

#include <cstdint>
#include <string>
#include <vector>

#include "coxrsk/sampling.hpp"
#include "coxrsk/shapes.hpp"

namespace coxrsk {

struct VerifyOptions {
  // Empty means the default shapes (2,1), (2,2), (3,1), (3,2,1).
  std::vector<Partition> shapes;
  Weight max_entry = 2;
  // Every Coxeter element of S_n instead of the special one and its inverse.
  bool all_coxeter = false;
  // Random DAGs for the oracle check, random fillings for sampled checks.
  std::size_t samples = 200;
  std::uint64_t seed = kDefaultSeed;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  // Summary on success; first counterexample on failure.
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

VerifyReport run_verification(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);

}  // namespace coxrsk
