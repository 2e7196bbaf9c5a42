#pragma once

// Text and JSON formats.
//
// Profile, plain:      whitespace/newline separated positive integers.
// Profile, JSON:       {"citations": [5, 4, 3]}; item ids are array positions.
// Partition:           [[0, 2], [1]]
// 3-PARTITION:         "m b" on the first line, then 3m integers.
// Reduced instance:    a plain profile line followed by "k=<value>".

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hmerge/achievability.hpp"
#include "hmerge/improvement.hpp"
#include "hmerge/profile.hpp"
#include "hmerge/reduction.hpp"

namespace hmerge {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accepts either profile format; JSON is detected by a leading '{'.
Profile parse_profile(std::string_view text);
std::string format_profile(const Profile& profile);
nlohmann::json profile_to_json(const Profile& profile);

MergePartition parse_partition(std::string_view text);
nlohmann::json partition_to_json(const MergePartition& partition);

ThreePartitionInstance parse_3partition(std::string_view text);
std::string format_3partition(const ThreePartitionInstance& instance);

/// Returns the profile and k.
std::pair<Profile, Count> parse_reduced(std::string_view text);
std::string format_reduced(const ReducedInstance& reduced);

nlohmann::json to_json(const ValueReport& report);
nlohmann::json to_json(const Classification& classification);
nlohmann::json to_json(const ImprovementWitness& witness);
nlohmann::json to_json(const AchievabilityCertificate& certificate);
AchievabilityCertificate certificate_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const MaxResult& result);
nlohmann::json to_json(const ThreePartitionWitness& witness);
nlohmann::json to_json(const ReductionReport& report);

}  // namespace hmerge
