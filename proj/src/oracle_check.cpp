#include "hmerge/oracle_check.hpp"

#include <random>

#include "hmerge/improvement.hpp"

namespace hmerge {
namespace {

void extend(std::vector<Count>& prefix, std::size_t max_size, Count ceiling,
            const std::function<void(const std::vector<Count>&)>& fn) {
  fn(prefix);
  if (prefix.size() == max_size) return;
  for (Count v = ceiling; v >= 1; --v) {
    prefix.push_back(v);
    extend(prefix, max_size, v, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_multiset(std::size_t max_size, Count max_value,
                       const std::function<void(const std::vector<Count>&)>& fn) {
  std::vector<Count> prefix;
  extend(prefix, max_size, max_value, fn);
}

OracleCheckReport run_oracle_check(const OracleCheckParams& params) {
  OracleCheckReport report;
  auto check = [&](const std::vector<Count>& values) {
    ++report.instances;
    const Profile profile(values);
    const Count h = h_index(profile);
    const Count best = brute_force_max(profile, params.limits).value;
    bool bad = false;

    if (can_improve(profile) != (best > h)) {
      ++report.improve_mismatches;
      bad = true;
    }
    if (auto witness = improving_partition(profile)) {
      if (partition_value(profile, witness->partition).value <= h) {
        ++report.witness_failures;
        bad = true;
      }
    }
    if (max_achievable(profile, params.limits).value != best) {
      ++report.max_mismatches;
      bad = true;
    }
    if (bad && report.failures.size() < 5) report.failures.push_back(values);
  };

  if (params.count == 0) {
    for_each_multiset(params.max_size, params.max_value, check);
    return report;
  }
  std::mt19937_64 rng(params.seed);
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(params.max_size, 1));
  std::uniform_int_distribution<Count> value(1, std::max<Count>(params.max_value, 1));
  for (std::size_t i = 0; i < params.count; ++i) {
    std::vector<Count> values(size(rng));
    for (auto& v : values) v = value(rng);
    check(values);
  }
  return report;
}

}  // namespace hmerge
