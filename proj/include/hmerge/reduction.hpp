#pragma once

// The 3-PARTITION to H-index achievability reduction, an exact 3-PARTITION
// solver and seeded instance generators.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hmerge/achievability.hpp"
#include "hmerge/profile.hpp"

namespace hmerge {

/// 3m positive numbers to be split into m blocks of sum b each. Blocks are
/// not required to have three elements.
struct ThreePartitionInstance {
  std::vector<Count> numbers;
  Count m = 0;
  Count b = 0;

  /// Throws MalformedInstance unless m, b > 0, |numbers| = 3m, every number
  /// is positive and the numbers sum to m * b.
  void validate() const;
  /// Every number lies strictly between b/4 and b/2.
  bool in_range() const;
};

/// Blocks of indices into ThreePartitionInstance::numbers.
struct ThreePartitionWitness {
  std::vector<std::vector<std::size_t>> blocks;
};

/// The achievability instance (profile, k). Items 0..3m-1 of the profile are
/// the shifted numbers in input order; the padding copies of k follow.
struct ReducedInstance {
  Profile profile;
  Count k = 0;
  std::vector<Count> shifted;
  Count padding_count = 0;
};

/// k = b + 3m, each number shifted up by m, plus k - m = b + 2m copies of k.
/// Total for any well-formed instance; the equivalence it encodes is only
/// guaranteed for in-range instances. Throws MalformedInstance.
ReducedInstance reduce_3partition(const ThreePartitionInstance& instance);

/// Throws MalformedInstance, or OracleCapExceeded if 3m > limits.oracle_cap.
std::optional<ThreePartitionWitness> solve_3partition(const ThreePartitionInstance& instance,
                                                      const SearchLimits& limits = {});

/// Lifts a 3-PARTITION witness to a certificate for the reduced instance:
/// the padding singletons followed by the m shifted blocks.
AchievabilityCertificate lift_witness(const ReducedInstance& reduced,
                                      const ThreePartitionWitness& witness);

struct ReductionReport {
  ReducedInstance reduced;
  bool three_partition_yes = false;
  bool achievable_yes = false;
  Count max_value = 0;
  std::uint64_t nodes_explored = 0;
  std::optional<ThreePartitionWitness> partition_witness;
  /// Lifted from partition_witness.
  std::optional<AchievabilityCertificate> lifted_certificate;
  /// Returned by max_achievable on the reduced profile, when value >= k.
  std::optional<AchievabilityCertificate> solver_certificate;

  bool agree() const { return three_partition_yes == achievable_yes; }
};

/// Solves both sides and compares. Throws InvalidParameters for out-of-range
/// instances, plus whatever the solvers throw.
ReductionReport verify_reduction(const ThreePartitionInstance& instance,
                                 const SearchLimits& limits = {});

/// 3m values drawn uniformly from the integers strictly between b/4 and b/2,
/// adjusted within that range until they sum to m * b. The instance may or
/// may not be solvable. Throws InvalidParameters when no such multiset exists.
ThreePartitionInstance gen_3partition_instance(Count m, Count b, std::uint64_t seed);

struct UniformCitations {
  Count lo = 1;
  Count hi = 1;
};

/// P(x) proportional to x^(-exponent) for x in 1..max.
struct ZipfCitations {
  double exponent = 1.0;
  Count max = 1;
};

using CitationDistribution = std::variant<UniformCitations, ZipfCitations>;

/// Throws InvalidParameters.
Profile gen_profile(std::size_t n, const CitationDistribution& distribution,
                    std::uint64_t seed);

}  // namespace hmerge
