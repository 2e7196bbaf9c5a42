#pragma once

// Polynomial-time decision and construction of improving partitions, i.e.
// merges that raise the H-index by at least one.

#include <optional>
#include <vector>

#include "hmerge/profile.hpp"

namespace hmerge {

/// Decomposition of a profile around its H-index h.
///
/// The h canonically-first items form the smallest submultiset with the same
/// H-index. Those strictly above h are supercritical, those equal to h are
/// critical. The tail holds the |critical| canonically-last items, and rest is
/// everything else. All id lists are in canonical order.
struct Classification {
  Count h = 0;
  std::vector<ItemId> supercritical_ids;
  std::vector<ItemId> critical_ids;
  std::vector<ItemId> tail_ids;
  std::vector<ItemId> rest_ids;
  Count rest_sum = 0;
  /// The tail and the critical items share an occurrence; rest is then empty.
  bool overlap = false;
};

struct ImprovementWitness {
  /// Supercritical singletons, then (critical, tail) pairs, then the rest
  /// merged into a single group when non-empty.
  MergePartition partition;
  Count achieved = 0;
};

Classification classify(const Profile& profile);

/// True iff some partition of the profile has value > h_index(profile).
bool can_improve(const Profile& profile);
bool can_improve(const Classification& classification);

std::optional<ImprovementWitness> improving_partition(const Profile& profile);

}  // namespace hmerge
