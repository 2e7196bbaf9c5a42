#pragma once

// Citation profiles, merge partitions and the two value functions: the plain
// H-index of a profile and the value of a partition (the largest number of
// merged groups that each reach that number of citations).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmerge {

using ItemId = std::size_t;
using Count = std::int64_t;

struct Item {
  ItemId id = 0;
  Count citations = 1;

  friend bool operator==(const Item&, const Item&) = default;
};

/// A multiset of positive citation counts. Each occurrence is a separate item
/// whose id is its position in the input.
class Profile {
 public:
  Profile() = default;
  /// Throws std::invalid_argument if any count is < 1.
  explicit Profile(std::vector<Count> citations);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Item>& items() const { return items_; }
  Count citations(ItemId id) const { return items_.at(id).citations; }
  std::vector<Count> values() const;
  Count total() const;
  Count max_value() const;

  /// Ids sorted by citations descending, ties by ascending id.
  const std::vector<ItemId>& canonical_order() const { return order_; }

 private:
  std::vector<Item> items_;
  std::vector<ItemId> order_;
};

using Group = std::vector<ItemId>;

struct MergePartition {
  std::vector<Group> groups;

  std::size_t size() const { return groups.size(); }
  friend bool operator==(const MergePartition&, const MergePartition&) = default;
};

enum class PartitionIssueKind { kEmptyGroup, kUnknownId, kDuplicateId, kUncoveredId };

struct PartitionIssue {
  PartitionIssueKind kind;
  std::size_t group = 0;  // offending group index (unused for kUncoveredId)
  ItemId id = 0;          // offending item id (unused for kEmptyGroup)

  std::string message() const;
  friend bool operator==(const PartitionIssue&, const PartitionIssue&) = default;
};

class InvalidPartition : public std::invalid_argument {
 public:
  explicit InvalidPartition(PartitionIssue issue)
      : std::invalid_argument(issue.message()), issue_(issue) {}
  const PartitionIssue& issue() const { return issue_; }

 private:
  PartitionIssue issue_;
};

struct ValueReport {
  Count value = 0;
  /// Group indices of a maximum good subset: largest sums first, ties by
  /// lower group index.
  std::vector<std::size_t> witness_group_ids;
};

/// Largest t such that at least t values are >= t. Accepts any order.
Count h_index(std::span<const Count> values);
Count h_index(const Profile& profile);

MergePartition singleton_partition(const Profile& profile);

/// Returns the first violation found, or nullopt if the partition is valid.
/// Groups are scanned in order; uncovered ids are reported last.
std::optional<PartitionIssue> validate_partition(const Profile& profile,
                                                 const MergePartition& partition);

/// One sum per group, in group order. Throws InvalidPartition.
std::vector<Count> group_sums(const Profile& profile, const MergePartition& partition);

/// Throws InvalidPartition.
ValueReport partition_value(const Profile& profile, const MergePartition& partition);

/// The profile whose items are the merged group sums, one per group.
Profile merged_profile(const Profile& profile, const MergePartition& partition);

}  // namespace hmerge
