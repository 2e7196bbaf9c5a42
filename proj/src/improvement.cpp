#include "hmerge/improvement.hpp"

namespace hmerge {

Classification classify(const Profile& profile) {
  Classification c;
  const auto& order = profile.canonical_order();
  const std::size_t n = order.size();
  c.h = h_index(profile);
  const auto h = static_cast<std::size_t>(c.h);

  for (std::size_t pos = 0; pos < h; ++pos) {
    const ItemId id = order[pos];
    if (profile.citations(id) > c.h) {
      c.supercritical_ids.push_back(id);
    } else {
      c.critical_ids.push_back(id);
    }
  }

  const std::size_t tail_size = c.critical_ids.size();
  c.tail_ids.assign(order.end() - static_cast<std::ptrdiff_t>(tail_size), order.end());

  // Front segment [0, h) and back segment [n - |C|, n) intersect iff n < h + |C|.
  c.overlap = n < h + tail_size;
  if (!c.overlap) {
    for (std::size_t pos = h; pos < n - tail_size; ++pos) {
      c.rest_ids.push_back(order[pos]);
      c.rest_sum += profile.citations(order[pos]);
    }
  }
  return c;
}

bool can_improve(const Classification& c) {
  const auto anchored = static_cast<Count>(c.supercritical_ids.size() + c.critical_ids.size());
  return !c.overlap && c.rest_sum > anchored;
}

bool can_improve(const Profile& profile) { return can_improve(classify(profile)); }

std::optional<ImprovementWitness> improving_partition(const Profile& profile) {
  const Classification c = classify(profile);
  if (!can_improve(c)) return std::nullopt;

  ImprovementWitness witness;
  auto& groups = witness.partition.groups;
  for (ItemId id : c.supercritical_ids) groups.push_back({id});
  // Both lists are value-descending, so this pairs largest with largest.
  for (std::size_t i = 0; i < c.critical_ids.size(); ++i) {
    groups.push_back({c.critical_ids[i], c.tail_ids[i]});
  }
  if (!c.rest_ids.empty()) groups.push_back(c.rest_ids);

  witness.achieved = partition_value(profile, witness.partition).value;
  return witness;
}

}  // namespace hmerge
