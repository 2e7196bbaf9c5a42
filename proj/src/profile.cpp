#include "hmerge/profile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hmerge {

Profile::Profile(std::vector<Count> citations) {
  items_.reserve(citations.size());
  for (std::size_t i = 0; i < citations.size(); ++i) {
    if (citations[i] < 1) {
      std::ostringstream msg;
      msg << "item " << i << " has citation count " << citations[i]
          << "; counts must be positive";
      throw std::invalid_argument(msg.str());
    }
    items_.push_back({i, citations[i]});
  }
  order_.resize(items_.size());
  std::iota(order_.begin(), order_.end(), ItemId{0});
  std::stable_sort(order_.begin(), order_.end(), [this](ItemId a, ItemId b) {
    return items_[a].citations > items_[b].citations;
  });
}

std::vector<Count> Profile::values() const {
  std::vector<Count> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.citations);
  return out;
}

Count Profile::total() const {
  Count sum = 0;
  for (const auto& item : items_) sum += item.citations;
  return sum;
}

Count Profile::max_value() const {
  return items_.empty() ? 0 : items_[order_.front()].citations;
}

std::string PartitionIssue::message() const {
  std::ostringstream msg;
  switch (kind) {
    case PartitionIssueKind::kEmptyGroup:
      msg << "group " << group << " is empty";
      break;
    case PartitionIssueKind::kUnknownId:
      msg << "group " << group << " references unknown item id " << id;
      break;
    case PartitionIssueKind::kDuplicateId:
      msg << "group " << group << " repeats item id " << id;
      break;
    case PartitionIssueKind::kUncoveredId:
      msg << "item id " << id << " is not covered by any group";
      break;
  }
  return msg.str();
}

Count h_index(std::span<const Count> values) {
  std::vector<Count> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  Count h = 0;
  while (h < static_cast<Count>(sorted.size()) && sorted[h] >= h + 1) ++h;
  return h;
}

Count h_index(const Profile& profile) {
  const auto values = profile.values();
  return h_index(values);
}

MergePartition singleton_partition(const Profile& profile) {
  MergePartition partition;
  partition.groups.reserve(profile.size());
  for (const auto& item : profile.items()) partition.groups.push_back({item.id});
  return partition;
}

std::optional<PartitionIssue> validate_partition(const Profile& profile,
                                                 const MergePartition& partition) {
  std::vector<bool> seen(profile.size(), false);
  for (std::size_t g = 0; g < partition.groups.size(); ++g) {
    const auto& group = partition.groups[g];
    if (group.empty()) return PartitionIssue{PartitionIssueKind::kEmptyGroup, g, 0};
    for (ItemId id : group) {
      if (id >= profile.size()) return PartitionIssue{PartitionIssueKind::kUnknownId, g, id};
      if (seen[id]) return PartitionIssue{PartitionIssueKind::kDuplicateId, g, id};
      seen[id] = true;
    }
  }
  for (ItemId id = 0; id < seen.size(); ++id) {
    if (!seen[id]) return PartitionIssue{PartitionIssueKind::kUncoveredId, 0, id};
  }
  return std::nullopt;
}

std::vector<Count> group_sums(const Profile& profile, const MergePartition& partition) {
  if (auto issue = validate_partition(profile, partition)) throw InvalidPartition(*issue);
  std::vector<Count> sums;
  sums.reserve(partition.size());
  for (const auto& group : partition.groups) {
    Count sum = 0;
    for (ItemId id : group) sum += profile.citations(id);
    sums.push_back(sum);
  }
  return sums;
}

ValueReport partition_value(const Profile& profile, const MergePartition& partition) {
  const auto sums = group_sums(profile, partition);
  std::vector<std::size_t> order(sums.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sums[a] > sums[b]; });

  ValueReport report;
  while (report.value < static_cast<Count>(order.size()) &&
         sums[order[report.value]] >= report.value + 1) {
    ++report.value;
  }
  report.witness_group_ids.assign(order.begin(), order.begin() + report.value);
  return report;
}

Profile merged_profile(const Profile& profile, const MergePartition& partition) {
  return Profile(group_sums(profile, partition));
}

}  // namespace hmerge
