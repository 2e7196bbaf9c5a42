#include "hmerge/reduction.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "hmerge/bin_covering.hpp"

namespace hmerge {

void ThreePartitionInstance::validate() const {
  std::ostringstream msg;
  if (m <= 0 || b <= 0) {
    msg << "m and b must be positive (got m=" << m << ", b=" << b << ")";
    throw MalformedInstance(msg.str());
  }
  if (static_cast<Count>(numbers.size()) != 3 * m) {
    msg << "expected " << 3 * m << " numbers for m=" << m << ", got " << numbers.size();
    throw MalformedInstance(msg.str());
  }
  Count sum = 0;
  for (Count x : numbers) {
    if (x < 1) throw MalformedInstance("numbers must be positive");
    sum += x;
  }
  if (sum != m * b) {
    msg << "numbers sum to " << sum << ", expected m*b = " << m * b;
    throw MalformedInstance(msg.str());
  }
}

bool ThreePartitionInstance::in_range() const {
  for (Count x : numbers) {
    if (!(4 * x > b && 2 * x < b)) return false;
  }
  return true;
}

ReducedInstance reduce_3partition(const ThreePartitionInstance& instance) {
  instance.validate();
  ReducedInstance out;
  out.k = instance.b + 3 * instance.m;
  out.padding_count = out.k - instance.m;
  out.shifted.reserve(instance.numbers.size());
  for (Count x : instance.numbers) out.shifted.push_back(x + instance.m);

  std::vector<Count> values = out.shifted;
  values.insert(values.end(), static_cast<std::size_t>(out.padding_count), out.k);
  out.profile = Profile(std::move(values));
  return out;
}

std::optional<ThreePartitionWitness> solve_3partition(const ThreePartitionInstance& instance,
                                                      const SearchLimits& limits) {
  instance.validate();
  if (instance.numbers.size() > limits.oracle_cap) {
    throw OracleCapExceeded(instance.numbers.size(), limits.oracle_cap);
  }
  const Profile profile(instance.numbers);
  std::vector<ItemId> pool(profile.size());
  std::iota(pool.begin(), pool.end(), ItemId{0});

  NodeBudget budget(limits.node_budget);
  auto bins = find_bins(profile, pool, static_cast<std::size_t>(instance.m),
                        BinSpec::exact(instance.b), budget);
  if (!bins) return std::nullopt;
  ThreePartitionWitness witness;
  witness.blocks.assign(bins->begin(), bins->end());
  return witness;
}

AchievabilityCertificate lift_witness(const ReducedInstance& reduced,
                                      const ThreePartitionWitness& witness) {
  AchievabilityCertificate cert;
  cert.k = reduced.k;
  auto& groups = cert.partition.groups;
  const std::size_t first_pad = reduced.shifted.size();
  for (std::size_t i = 0; i < static_cast<std::size_t>(reduced.padding_count); ++i) {
    groups.push_back({first_pad + i});
  }
  for (const auto& block : witness.blocks) groups.emplace_back(block.begin(), block.end());
  cert.witness_group_ids.resize(groups.size());
  std::iota(cert.witness_group_ids.begin(), cert.witness_group_ids.end(), std::size_t{0});
  return cert;
}

ReductionReport verify_reduction(const ThreePartitionInstance& instance,
                                 const SearchLimits& limits) {
  instance.validate();
  if (!instance.in_range()) {
    throw InvalidParameters(
        "instance is not in range: every number must lie strictly between b/4 and b/2");
  }
  ReductionReport report;
  report.reduced = reduce_3partition(instance);

  report.partition_witness = solve_3partition(instance, limits);
  report.three_partition_yes = report.partition_witness.has_value();
  if (report.partition_witness) {
    report.lifted_certificate = lift_witness(report.reduced, *report.partition_witness);
  }

  MaxResult best = max_achievable(report.reduced.profile, limits);
  report.max_value = best.value;
  report.nodes_explored = best.nodes_explored;
  report.achievable_yes = best.value >= report.reduced.k;
  if (report.achievable_yes) report.solver_certificate = std::move(best.certificate);
  return report;
}

ThreePartitionInstance gen_3partition_instance(Count m, Count b, std::uint64_t seed) {
  if (m <= 0 || b <= 0) throw InvalidParameters("m and b must be positive");
  // Integers x with b/4 < x < b/2.
  const Count lo = b / 4 + 1;
  const Count hi = (b - 1) / 2;
  const Count count = 3 * m;
  const Count target = m * b;
  if (lo > hi || count * lo > target || count * hi < target) {
    std::ostringstream msg;
    msg << "no " << count << " integers strictly between b/4 and b/2 sum to " << target
        << " (m=" << m << ", b=" << b << ")";
    throw InvalidParameters(msg.str());
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Count> pick(lo, hi);
  ThreePartitionInstance inst{std::vector<Count>(static_cast<std::size_t>(count)), m, b};
  Count sum = 0;
  constexpr int kMaxDraws = 1000;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    sum = 0;
    for (auto& x : inst.numbers) sum += (x = pick(rng));
    if (sum == target) return inst;
  }

  std::uniform_int_distribution<std::size_t> index(0, inst.numbers.size() - 1);
  while (sum != target) {
    Count& x = inst.numbers[index(rng)];
    if (sum < target && x < hi) {
      ++x;
      ++sum;
    } else if (sum > target && x > lo) {
      --x;
      --sum;
    }
  }
  return inst;
}

Profile gen_profile(std::size_t n, const CitationDistribution& distribution,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Count> values(n);
  if (const auto* u = std::get_if<UniformCitations>(&distribution)) {
    if (u->lo < 1 || u->lo > u->hi) {
      throw InvalidParameters("uniform citations need 1 <= lo <= hi");
    }
    std::uniform_int_distribution<Count> pick(u->lo, u->hi);
    for (auto& v : values) v = pick(rng);
  } else {
    const auto& z = std::get<ZipfCitations>(distribution);
    if (z.max < 1 || !(z.exponent > 0.0)) {
      throw InvalidParameters("zipf citations need max >= 1 and exponent > 0");
    }
    std::vector<double> weights(static_cast<std::size_t>(z.max));
    for (std::size_t i = 0; i < weights.size(); ++i) {
      weights[i] = std::pow(static_cast<double>(i + 1), -z.exponent);
    }
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    for (auto& v : values) v = static_cast<Count>(pick(rng)) + 1;
  }
  return Profile(std::move(values));
}

}  // namespace hmerge
