#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmerge {

/// Parameters for which the requested object cannot exist.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 3-PARTITION instance whose size or sum is inconsistent with (m, b).
class MalformedInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact search ran out of its node budget; no answer was certified.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("search node budget of " + std::to_string(budget) +
                           " exceeded; the exact answer was not certified"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Exhaustive enumeration requested on more items than the configured cap.
class OracleCapExceeded : public std::length_error {
 public:
  OracleCapExceeded(std::size_t n, std::size_t cap)
      : std::length_error(std::to_string(n) + " items exceed the exhaustive oracle cap of " +
                          std::to_string(cap)) {}
};

}  // namespace hmerge
