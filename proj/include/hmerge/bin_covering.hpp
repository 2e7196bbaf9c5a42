#pragma once

// Exact search for a fixed number of disjoint bins drawn from a pool of items.
// Cover mode: every bin sums to at least a threshold, leftovers are allowed.
// Exact mode: every bin sums to exactly a target and every item is used.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "hmerge/errors.hpp"
#include "hmerge/profile.hpp"

namespace hmerge {

class NodeBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit NodeBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void tick() {
    if (++used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct BinSpec {
  Count lower = 0;
  Count upper = std::numeric_limits<Count>::max();

  static BinSpec cover(Count threshold) { return {threshold, std::numeric_limits<Count>::max()}; }
  static BinSpec exact(Count target) { return {target, target}; }
  bool is_exact() const { return upper != std::numeric_limits<Count>::max(); }
};

/// Finds `bins` disjoint groups of pool items meeting `spec`, or nullopt if
/// none exist. Bins come out in discovery order; each bin lists ids in
/// canonical order. Every bin is inclusion-minimal in cover mode.
///
/// Throws BudgetExceeded when the search visits more nodes than `budget`
/// allows.
std::optional<std::vector<Group>> find_bins(const Profile& profile,
                                            std::span<const ItemId> pool, std::size_t bins,
                                            BinSpec spec, NodeBudget& budget);

}  // namespace hmerge
