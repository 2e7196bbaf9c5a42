#include "hmerge/io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace hmerge {
namespace {

TEST(ProfileFormat, PlainText) {
  EXPECT_EQ(parse_profile("5 4\n3 3\t3 2\n").values(), (std::vector<Count>{5, 4, 3, 3, 3, 2}));
  EXPECT_TRUE(parse_profile("").empty());
  EXPECT_TRUE(parse_profile("  \n ").empty());
  EXPECT_THROW(parse_profile("5 x 3"), ParseError);
  EXPECT_THROW(parse_profile("5 0 3"), ParseError);
  EXPECT_THROW(parse_profile("5 -1"), ParseError);
  EXPECT_THROW(parse_profile("5 3.5"), ParseError);
}

TEST(ProfileFormat, Json) {
  EXPECT_EQ(parse_profile(R"({"citations": [11, 11, 3]})").values(),
            (std::vector<Count>{11, 11, 3}));
  EXPECT_TRUE(parse_profile(R"( {"citations": []})").empty());
  EXPECT_THROW(parse_profile(R"({"cites": [1]})"), ParseError);
  EXPECT_THROW(parse_profile(R"({"citations": [1, "2"]})"), ParseError);
  EXPECT_THROW(parse_profile(R"({"citations": [1, 0]})"), ParseError);
  EXPECT_THROW(parse_profile(R"({"citations": [1,)"), ParseError);
}

TEST(ProfileFormat, RoundTripsThroughBothFormats) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const Profile p(testing::random_values(rng, 0, 30, 1000));
    EXPECT_EQ(parse_profile(format_profile(p)).values(), p.values());
    EXPECT_EQ(parse_profile(profile_to_json(p).dump()).values(), p.values());
  }
}

TEST(PartitionFormat, ArrayOfArrays) {
  const auto p = parse_partition("[[0, 2], [1]]");
  EXPECT_EQ(p.groups, (std::vector<Group>{{0, 2}, {1}}));
  EXPECT_EQ(partition_to_json(p).dump(), "[[0,2],[1]]");
  EXPECT_TRUE(parse_partition("[]").groups.empty());
  EXPECT_THROW(parse_partition("[[0, -1]]"), ParseError);
  EXPECT_THROW(parse_partition("{}"), ParseError);
  EXPECT_THROW(parse_partition("[0, 1]"), ParseError);
}

TEST(ThreePartitionFormat, HeaderThenNumbers) {
  const auto inst = parse_3partition("2 10\n3 3 4 3 3 4\n");
  EXPECT_EQ(inst.m, 2);
  EXPECT_EQ(inst.b, 10);
  EXPECT_EQ(inst.numbers, (std::vector<Count>{3, 3, 4, 3, 3, 4}));
  EXPECT_EQ(format_3partition(inst), "2 10\n3 3 4 3 3 4\n");
  EXPECT_THROW(parse_3partition("2 10\n3 3 4\n"), ParseError);
  EXPECT_THROW(parse_3partition("2\n3 3 4 3 3 4\n"), ParseError);
}

TEST(ReducedFormat, ProfileLineThenK) {
  const auto reduced = reduce_3partition({{3, 3, 4}, 1, 10});
  const std::string text = format_reduced(reduced);
  EXPECT_EQ(text, "4 4 5 13 13 13 13 13 13 13 13 13 13 13 13\nk=13\n");
  const auto [profile, k] = parse_reduced(text);
  EXPECT_EQ(profile.values(), reduced.profile.values());
  EXPECT_EQ(k, 13);
  EXPECT_THROW(parse_reduced("1 2 3\n"), ParseError);
}

TEST(CertificateFormat, RoundTripsAndRevalidates) {
  const Profile p({5, 4, 3, 3, 3, 2, 1});
  const auto result = max_achievable(p);
  const auto doc = to_json(result.certificate);
  const auto back = certificate_from_json(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(back.k, result.certificate.k);
  EXPECT_EQ(back.partition, result.certificate.partition);
  EXPECT_EQ(back.witness_group_ids, result.certificate.witness_group_ids);
  EXPECT_FALSE(validate_partition(p, back.partition));
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"k": 1})")), ParseError);
}

}  // namespace
}  // namespace hmerge
