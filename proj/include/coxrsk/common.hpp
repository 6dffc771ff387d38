#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxrsk {

using Weight = std::int64_t;

// Error taxonomy. The CLI maps FormatError / DomainError / RangeError /
// CapacityError to exit code 1.
struct FormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Raised when a brute-force routine would exceed its size guard.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// A transposition (lo hi) of the symmetric group, lo < hi, 1-based.
struct Transposition {
  int lo = 0;
  int hi = 0;

  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

std::string to_string(const Transposition& t);

}  // namespace coxrsk
