#include "hmerge/achievability.hpp"

#include <algorithm>

#include "hmerge/improvement.hpp"

namespace hmerge {

std::optional<AchievabilityCertificate> is_achievable(const Profile& profile, Count k,
                                                      NodeBudget& budget) {
  if (k < 0) throw InvalidParameters("k must be non-negative");
  const auto n = static_cast<Count>(profile.size());
  if (k > n) return std::nullopt;
  if (static_cast<__int128>(k) * k > profile.total()) return std::nullopt;

  AchievabilityCertificate cert;
  cert.k = k;

  std::vector<ItemId> big;
  std::vector<ItemId> small;
  for (ItemId id : profile.canonical_order()) {
    (profile.citations(id) >= k ? big : small).push_back(id);
  }

  if (static_cast<Count>(big.size()) >= k) {
    cert.partition = singleton_partition(profile);
    cert.witness_group_ids.assign(big.begin(), big.end());
    return cert;
  }

  const auto needed = static_cast<std::size_t>(k) - big.size();
  auto bins = find_bins(profile, small, needed, BinSpec::cover(k), budget);
  if (!bins) return std::nullopt;

  auto& groups = cert.partition.groups;
  for (ItemId id : big) groups.push_back({id});
  std::vector<bool> used(profile.size(), false);
  for (auto& bin : *bins) {
    for (ItemId id : bin) used[id] = true;
    groups.push_back(std::move(bin));
  }
  for (std::size_t g = 0; g < groups.size(); ++g) cert.witness_group_ids.push_back(g);

  Group garbage;
  for (ItemId id : small) {
    if (!used[id]) garbage.push_back(id);
  }
  if (!garbage.empty()) groups.push_back(std::move(garbage));
  return cert;
}

std::optional<AchievabilityCertificate> is_achievable(const Profile& profile, Count k,
                                                      const SearchLimits& limits) {
  NodeBudget budget(limits.node_budget);
  return is_achievable(profile, k, budget);
}

MaxResult max_achievable(const Profile& profile, const SearchLimits& limits) {
  NodeBudget budget(limits.node_budget);
  MaxResult result;
  result.value = h_index(profile);
  result.certificate = *is_achievable(profile, result.value, budget);
  // Achievable at k implies achievable at k - 1, so the first failure is final.
  while (auto next = is_achievable(profile, result.value + 1, budget)) {
    ++result.value;
    result.certificate = std::move(*next);
  }
  result.nodes_explored = budget.used();
  return result;
}

GreedyResult greedy_lower_bound(const Profile& profile) {
  GreedyResult result;
  result.partition = singleton_partition(profile);
  for (;;) {
    const Profile merged = merged_profile(profile, result.partition);
    auto witness = improving_partition(merged);
    if (!witness) break;
    MergePartition composed;
    for (const auto& outer : witness->partition.groups) {
      Group group;
      for (ItemId inner : outer) {
        const auto& members = result.partition.groups[inner];
        group.insert(group.end(), members.begin(), members.end());
      }
      composed.groups.push_back(std::move(group));
    }
    result.partition = std::move(composed);
    ++result.rounds;
  }
  result.value = partition_value(profile, result.partition).value;
  return result;
}

MaxResult brute_force_max(const Profile& profile, const SearchLimits& limits) {
  const std::size_t n = profile.size();
  PartitionEnumerator e = enumerate_partitions(n, limits.oracle_cap);

  MaxResult result;
  result.value = -1;
  std::vector<Count> sums;
  std::vector<std::size_t> best_labels;
  do {
    ++result.nodes_explored;
    sums.assign(e.block_count(), 0);
    for (std::size_t i = 0; i < n; ++i) sums[e.labels()[i]] += profile.citations(i);
    const Count value = h_index(sums);
    if (value > result.value) {
      result.value = value;
      best_labels = e.labels();
    }
  } while (e.next());

  MergePartition best;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_labels[i] == best.groups.size()) best.groups.emplace_back();
    best.groups[best_labels[i]].push_back(i);
  }
  result.certificate.k = result.value;
  result.certificate.witness_group_ids = partition_value(profile, best).witness_group_ids;
  result.certificate.partition = std::move(best);
  return result;
}

PartitionEnumerator::PartitionEnumerator(std::size_t n)
    : labels_(n, 0), prefix_max_(n, 0), blocks_(n == 0 ? 0 : 1) {}

bool PartitionEnumerator::next() {
  const std::size_t n = labels_.size();
  for (std::size_t i = n; i-- > 1;) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      blocks_ = prefix_max_[n - 1] + 1;
      return true;
    }
  }
  return false;
}

MergePartition PartitionEnumerator::partition() const {
  MergePartition p;
  p.groups.resize(blocks_);
  for (std::size_t i = 0; i < labels_.size(); ++i) p.groups[labels_[i]].push_back(i);
  return p;
}

PartitionEnumerator enumerate_partitions(std::size_t n, std::size_t cap) {
  if (n > cap) throw OracleCapExceeded(n, cap);
  return PartitionEnumerator(n);
}

}  // namespace hmerge
