#pragma once

// Exact solvers for "can merging reach H-index k?" and "what is the largest
// H-index merging can reach?", an exhaustive oracle over all set partitions,
// and a greedy lower bound built from repeated improvement rounds.

#include <cstdint>
#include <optional>
#include <vector>

#include "hmerge/bin_covering.hpp"
#include "hmerge/errors.hpp"
#include "hmerge/profile.hpp"

namespace hmerge {

struct SearchLimits {
  std::uint64_t node_budget = NodeBudget::kDefaultLimit;
  /// Largest profile the exhaustive oracle will enumerate (Bell(11) = 678570).
  std::size_t oracle_cap = 11;
};

struct AchievabilityCertificate {
  MergePartition partition;
  Count k = 0;
  /// Groups whose sums are each >= k; at least k of them.
  std::vector<std::size_t> witness_group_ids;
};

struct MaxResult {
  Count value = 0;
  AchievabilityCertificate certificate;
  std::uint64_t nodes_explored = 0;
};

/// Items with at least k citations become singleton witness groups; the rest
/// feed a bin-covering search for the missing groups. Leftovers of that
/// search are merged into one trailing garbage group. When no search is
/// needed the singleton partition is the certificate.
std::optional<AchievabilityCertificate> is_achievable(const Profile& profile, Count k,
                                                      NodeBudget& budget);
std::optional<AchievabilityCertificate> is_achievable(const Profile& profile, Count k,
                                                      const SearchLimits& limits = {});

/// Throws BudgetExceeded if the node budget runs out.
MaxResult max_achievable(const Profile& profile, const SearchLimits& limits = {});

struct GreedyResult {
  Count value = 0;
  MergePartition partition;
  int rounds = 0;
};

GreedyResult greedy_lower_bound(const Profile& profile);

/// Evaluates every set partition. Throws OracleCapExceeded.
MaxResult brute_force_max(const Profile& profile, const SearchLimits& limits = {});

/// Set partitions of {0..n-1} as restricted growth strings, in lexicographic
/// order.
///
///   PartitionEnumerator e(n);
///   do { use(e.partition()); } while (e.next());
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::size_t n);

  /// Advances to the next partition; false once all have been produced.
  bool next();

  /// labels()[i] is the block of element i; blocks are numbered in order of
  /// first appearance.
  const std::vector<std::size_t>& labels() const { return labels_; }
  std::size_t block_count() const { return blocks_; }
  MergePartition partition() const;

 private:
  std::vector<std::size_t> labels_;
  std::vector<std::size_t> prefix_max_;  // max of labels_[0..i]
  std::size_t blocks_ = 0;
};

/// Throws OracleCapExceeded when n > cap.
PartitionEnumerator enumerate_partitions(std::size_t n, std::size_t cap = SearchLimits{}.oracle_cap);

}  // namespace hmerge
