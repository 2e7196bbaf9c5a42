#include "hmerge/reduction.hpp"

#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

namespace hmerge {
namespace {

std::vector<Count> padded(std::vector<Count> shifted, std::size_t copies, Count k) {
  shifted.insert(shifted.end(), copies, k);
  return shifted;
}

TEST(Reduce3Partition, TwoBlocks) {
  const ThreePartitionInstance inst{{3, 3, 4, 3, 3, 4}, 2, 10};
  const auto r = reduce_3partition(inst);
  EXPECT_EQ(r.k, 16);
  EXPECT_EQ(r.shifted, (std::vector<Count>{5, 5, 6, 5, 5, 6}));
  EXPECT_EQ(r.padding_count, 14);
  EXPECT_EQ(r.profile.values(), padded({5, 5, 6, 5, 5, 6}, 14, 16));
}

TEST(Reduce3Partition, OneBlock) {
  const auto r = reduce_3partition({{3, 3, 4}, 1, 10});
  EXPECT_EQ(r.k, 13);
  EXPECT_EQ(r.shifted, (std::vector<Count>{4, 4, 5}));
  EXPECT_EQ(r.profile.values(), padded({4, 4, 5}, 12, 13));
}

TEST(Reduce3Partition, MappingIsTotalOutsideTheRange) {
  const ThreePartitionInstance inst{{1, 1, 1, 1, 1, 7}, 2, 6};
  EXPECT_FALSE(inst.in_range());
  const auto r = reduce_3partition(inst);
  EXPECT_EQ(r.k, 12);
  EXPECT_EQ(r.profile.values(), padded({3, 3, 3, 3, 3, 9}, 10, 12));
}

TEST(Reduce3Partition, ArithmeticInvariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Count m = 1 + static_cast<Count>(seed % 4);
    const Count b = 9 + static_cast<Count>(seed % 11);
    const auto inst = gen_3partition_instance(m, b, seed);
    const auto r = reduce_3partition(inst);
    EXPECT_EQ(std::accumulate(r.shifted.begin(), r.shifted.end(), Count{0}), m * r.k);
    EXPECT_EQ(static_cast<Count>(r.profile.size()), 3 * m + b + 2 * m);
    EXPECT_EQ(r.padding_count, b + 2 * m);
  }
}

TEST(Reduce3Partition, RejectsMalformedInstances) {
  EXPECT_THROW(reduce_3partition({{10}, 1, 10}), MalformedInstance);
  EXPECT_THROW(reduce_3partition({{3, 3, 3}, 1, 10}), MalformedInstance);
  EXPECT_THROW(reduce_3partition({{}, 0, 10}), MalformedInstance);
  EXPECT_THROW(reduce_3partition({{0, 5, 5}, 1, 10}), MalformedInstance);
}

TEST(Solve3Partition, FindsExactBlocks) {
  const ThreePartitionInstance inst{{3, 3, 4, 3, 3, 4}, 2, 10};
  const auto w = solve_3partition(inst);
  ASSERT_TRUE(w);
  ASSERT_EQ(w->blocks.size(), 2u);
  for (const auto& block : w->blocks) {
    std::vector<Count> values;
    for (auto i : block) values.push_back(inst.numbers[i]);
    std::sort(values.begin(), values.end());
    EXPECT_EQ(values, (std::vector<Count>{3, 3, 4}));
  }
}

TEST(Solve3Partition, AbsentWhenANumberExceedsB) {
  EXPECT_FALSE(solve_3partition({{1, 1, 1, 1, 1, 7}, 2, 6}));
}

TEST(Solve3Partition, BlocksNeedNotHaveThreeElements) {
  // 6 == b can only sit alone.
  const ThreePartitionInstance inst{{6, 2, 2, 1, 1, 1, 1, 1, 3}, 3, 6};
  ASSERT_NO_THROW(inst.validate());
  const auto w = solve_3partition(inst);
  ASSERT_TRUE(w);
  for (const auto& block : w->blocks) {
    Count s = 0;
    for (auto i : block) s += inst.numbers[i];
    EXPECT_EQ(s, 6);
  }
  EXPECT_TRUE(std::any_of(w->blocks.begin(), w->blocks.end(),
                          [](const auto& block) { return block.size() != 3; }));
}

TEST(Solve3Partition, ErrorsOnMalformedOrOversized) {
  EXPECT_THROW(solve_3partition({{10}, 1, 10}), MalformedInstance);
  SearchLimits small;
  small.oracle_cap = 5;
  EXPECT_THROW(solve_3partition({{3, 3, 4, 3, 3, 4}, 2, 10}, small), OracleCapExceeded);
}

TEST(VerifyReduction, YesInstanceLiftsToPaddingPlusBlocks) {
  const auto report = verify_reduction({{3, 3, 4, 3, 3, 4}, 2, 10});
  EXPECT_TRUE(report.three_partition_yes);
  EXPECT_TRUE(report.achievable_yes);
  EXPECT_TRUE(report.agree());
  EXPECT_EQ(report.max_value, 16);
  ASSERT_TRUE(report.lifted_certificate);
  const auto& cert = *report.lifted_certificate;
  const auto sums = group_sums(report.reduced.profile, cert.partition);
  ASSERT_EQ(sums.size(), 16u);
  for (std::size_t g = 0; g < 14; ++g) {
    EXPECT_EQ(cert.partition.groups[g].size(), 1u);
    EXPECT_EQ(sums[g], 16);
  }
  for (std::size_t g = 14; g < 16; ++g) {
    std::vector<Count> values;
    for (auto id : cert.partition.groups[g]) values.push_back(report.reduced.profile.citations(id));
    std::sort(values.begin(), values.end());
    EXPECT_EQ(values, (std::vector<Count>{5, 5, 6}));
  }
  ASSERT_TRUE(report.solver_certificate);
  EXPECT_GE(partition_value(report.reduced.profile, report.solver_certificate->partition).value,
            16);
}

TEST(VerifyReduction, NoInstanceAgrees) {
  // In range for b = 13, but no block containing the 6 can sum to 13.
  const ThreePartitionInstance inst{{4, 4, 4, 4, 4, 6}, 2, 13};
  ASSERT_TRUE(inst.in_range());
  const auto report = verify_reduction(inst);
  EXPECT_FALSE(report.three_partition_yes);
  EXPECT_FALSE(report.achievable_yes);
  EXPECT_TRUE(report.agree());
  EXPECT_LT(report.max_value, report.reduced.k);
}

TEST(VerifyReduction, RefusesOutOfRangeInstances) {
  EXPECT_THROW(verify_reduction({{1, 1, 1, 1, 1, 7}, 2, 6}), InvalidParameters);
}

TEST(Gen3Partition, OnlyValuesStrictlyInsideTheRange) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_3partition_instance(2, 10, seed);
    EXPECT_EQ(inst.numbers.size(), 6u);
    EXPECT_EQ(std::accumulate(inst.numbers.begin(), inst.numbers.end(), Count{0}), 20);
    for (auto x : inst.numbers) EXPECT_TRUE(x == 3 || x == 4);
    EXPECT_TRUE(inst.in_range());
  }
  auto one = gen_3partition_instance(1, 10, 5).numbers;
  std::sort(one.begin(), one.end());
  EXPECT_EQ(one, (std::vector<Count>{3, 3, 4}));
  EXPECT_EQ(gen_3partition_instance(2, 6, 1).numbers, (std::vector<Count>(6, 2)));
}

TEST(Gen3Partition, DeterministicAndValidated) {
  EXPECT_EQ(gen_3partition_instance(3, 20, 77).numbers,
            gen_3partition_instance(3, 20, 77).numbers);
  EXPECT_THROW(gen_3partition_instance(2, 4, 1), InvalidParameters);
  EXPECT_THROW(gen_3partition_instance(2, 8, 1), InvalidParameters);
  EXPECT_THROW(gen_3partition_instance(0, 10, 1), InvalidParameters);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = gen_3partition_instance(3, 19, seed);
    EXPECT_NO_THROW(inst.validate());
    EXPECT_TRUE(inst.in_range());
  }
}

TEST(GenProfile, UniformAndZipf) {
  const auto u = gen_profile(6, UniformCitations{1, 5}, 3);
  EXPECT_EQ(u.size(), 6u);
  for (auto v : u.values()) {
    EXPECT_GE(v, 1);
    EXPECT_LE(v, 5);
  }
  EXPECT_TRUE(gen_profile(0, UniformCitations{1, 5}, 3).empty());
  EXPECT_EQ(gen_profile(50, ZipfCitations{1.2, 100}, 9).values(),
            gen_profile(50, ZipfCitations{1.2, 100}, 9).values());
  for (auto v : gen_profile(200, ZipfCitations{1.5, 30}, 4).values()) {
    EXPECT_GE(v, 1);
    EXPECT_LE(v, 30);
  }
  EXPECT_THROW(gen_profile(3, UniformCitations{0, 5}, 1), InvalidParameters);
  EXPECT_THROW(gen_profile(3, UniformCitations{6, 5}, 1), InvalidParameters);
  EXPECT_THROW(gen_profile(3, ZipfCitations{0.0, 5}, 1), InvalidParameters);
}

}  // namespace
}  // namespace hmerge
