#pragma once

// Cross-checks the polynomial improvement test and the exact maximizer
// against exhaustive enumeration of all set partitions.

#include <cstdint>
#include <functional>
#include <vector>

#include "hmerge/achievability.hpp"

namespace hmerge {

struct OracleCheckParams {
  std::size_t max_size = 6;
  Count max_value = 6;
  /// 0 enumerates every multiset within the caps; otherwise this many random
  /// profiles with sizes in 1..max_size are drawn from `seed`.
  std::size_t count = 0;
  std::uint64_t seed = 1;
  SearchLimits limits;
};

struct OracleCheckReport {
  std::size_t instances = 0;
  std::size_t improve_mismatches = 0;
  std::size_t max_mismatches = 0;
  std::size_t witness_failures = 0;
  /// Up to five offending profiles, for diagnostics.
  std::vector<std::vector<Count>> failures;

  bool passed() const {
    return improve_mismatches == 0 && max_mismatches == 0 && witness_failures == 0;
  }
};

/// Calls fn on every non-increasing sequence of length 0..max_size with
/// values in 1..max_value.
void for_each_multiset(std::size_t max_size, Count max_value,
                       const std::function<void(const std::vector<Count>&)>& fn);

OracleCheckReport run_oracle_check(const OracleCheckParams& params);

}  // namespace hmerge
