#include "hmerge/bin_covering.hpp"

#include <algorithm>
#include <unordered_set>

namespace hmerge {
namespace {

using StateKey = std::vector<std::uint32_t>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : key) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// Items are bucketed by distinct value (descending). Each bucket hands out
// ids in ascending order, so take/put_back behave as a stack.
class BinSearch {
 public:
  BinSearch(const Profile& profile, std::span<const ItemId> pool, BinSpec spec,
            NodeBudget& budget)
      : spec_(spec), budget_(budget) {
    std::vector<ItemId> sorted(pool.begin(), pool.end());
    std::sort(sorted.begin(), sorted.end(), [&](ItemId a, ItemId b) {
      const Count va = profile.citations(a);
      const Count vb = profile.citations(b);
      return va != vb ? va > vb : a < b;
    });
    for (ItemId id : sorted) {
      const Count v = profile.citations(id);
      if (values_.empty() || values_.back() != v) {
        values_.push_back(v);
        ids_.emplace_back();
      }
      ids_.back().push_back(id);
      remaining_sum_ += v;
    }
    taken_.assign(values_.size(), 0);
    remaining_items_ = sorted.size();
  }

  std::optional<std::vector<Group>> run(std::size_t bins) {
    if (spec_.is_exact() &&
        static_cast<__int128>(remaining_sum_) != static_cast<__int128>(bins) * spec_.upper) {
      return std::nullopt;
    }
    if (!cover(bins)) return std::nullopt;
    return bins_;
  }

 private:
  std::size_t left(std::size_t d) const { return ids_[d].size() - taken_[d]; }

  void take(std::size_t d) {
    current_.push_back(ids_[d][taken_[d]++]);
    remaining_sum_ -= values_[d];
    --remaining_items_;
  }

  void put_back(std::size_t d) {
    current_.pop_back();
    --taken_[d];
    remaining_sum_ += values_[d];
    ++remaining_items_;
  }

  StateKey key(std::size_t bins_left) const {
    StateKey k(taken_.begin(), taken_.end());
    k.push_back(static_cast<std::uint32_t>(bins_left));
    return k;
  }

  bool close_bin(std::size_t bins_left) {
    bins_.push_back(current_);
    std::vector<ItemId> saved;
    saved.swap(current_);
    const bool ok = cover(bins_left - 1);
    current_.swap(saved);
    if (!ok) bins_.pop_back();
    return ok;
  }

  // Starts a new bin. The largest remaining item can always be assumed to
  // sit in it: in cover mode swapping it in for any bin member keeps that bin
  // covered, and in exact mode every item is placed anyway.
  bool cover(std::size_t bins_left) {
    budget_.tick();
    if (bins_left == 0) return true;
    if (static_cast<__int128>(remaining_sum_) <
        static_cast<__int128>(bins_left) * spec_.lower) {
      return false;
    }

    std::size_t first = 0;
    while (first < values_.size() && left(first) == 0) ++first;
    if (first == values_.size()) return false;
    // Items below the threshold need at least one partner.
    if (values_[first] < spec_.lower && 2 * bins_left > remaining_items_) return false;

    StateKey k = key(bins_left);
    if (failed_.contains(k)) return false;

    bool ok = false;
    const Count v = values_[first];
    if (v <= spec_.upper) {
      take(first);
      ok = v >= spec_.lower ? close_bin(bins_left) : fill(v, first, bins_left);
      put_back(first);
    }
    if (!ok) failed_.insert(std::move(k));
    return ok;
  }

  // Extends the open bin with values at index >= from (values descending).
  bool fill(Count sum, std::size_t from, std::size_t bins_left) {
    budget_.tick();
    const Count need = spec_.lower - sum;

    Count reachable = 0;
    for (std::size_t d = from; d < values_.size(); ++d) {
      reachable += values_[d] * static_cast<Count>(left(d));
    }
    if (reachable < need) return false;

    // In cover mode, of all values that close the bin, the smallest leaves a
    // pointwise larger remainder, so it dominates the others.
    std::optional<std::size_t> closer;
    std::size_t d = from;
    for (; d < values_.size() && values_[d] >= need; ++d) {
      if (left(d) == 0) continue;
      if (sum + values_[d] > spec_.upper) continue;
      closer = d;
    }
    if (closer) {
      take(*closer);
      const bool ok = close_bin(bins_left);
      put_back(*closer);
      if (ok) return true;
    }
    for (; d < values_.size(); ++d) {
      if (left(d) == 0) continue;
      take(d);
      const bool ok = fill(sum + values_[d], d, bins_left);
      put_back(d);
      if (ok) return true;
    }
    return false;
  }

  BinSpec spec_;
  NodeBudget& budget_;
  std::vector<Count> values_;
  std::vector<std::vector<ItemId>> ids_;
  std::vector<std::uint32_t> taken_;
  Count remaining_sum_ = 0;
  std::size_t remaining_items_ = 0;
  Group current_;
  std::vector<Group> bins_;
  std::unordered_set<StateKey, StateKeyHash> failed_;
};

}  // namespace

std::optional<std::vector<Group>> find_bins(const Profile& profile,
                                            std::span<const ItemId> pool, std::size_t bins,
                                            BinSpec spec, NodeBudget& budget) {
  return BinSearch(profile, pool, spec, budget).run(bins);
}

}  // namespace hmerge
