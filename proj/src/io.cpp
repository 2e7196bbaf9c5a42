#include "hmerge/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace hmerge {
namespace {

using nlohmann::json;

std::vector<Count> parse_integers(std::string_view text) {
  std::vector<Count> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    Count value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("not an integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
    pos = end;
  }
  return out;
}

Profile make_profile(std::vector<Count> values) {
  try {
    return Profile(std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string_view trim_left(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  return text;
}

json groups_json(const std::vector<Group>& groups) {
  json out = json::array();
  for (const auto& g : groups) out.push_back(g);
  return out;
}

}  // namespace

Profile parse_profile(std::string_view text) {
  const std::string_view body = trim_left(text);
  if (!body.empty() && body.front() == '{') {
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON profile: ") + e.what());
    }
    if (!doc.contains("citations") || !doc["citations"].is_array()) {
      throw ParseError("JSON profile needs a \"citations\" array");
    }
    std::vector<Count> values;
    for (const auto& v : doc["citations"]) {
      if (!v.is_number_integer()) throw ParseError("citations must be integers");
      values.push_back(v.get<Count>());
    }
    return make_profile(std::move(values));
  }
  return make_profile(parse_integers(text));
}

std::string format_profile(const Profile& profile) {
  std::ostringstream out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i) out << ' ';
    out << profile.citations(i);
  }
  out << '\n';
  return out.str();
}

json profile_to_json(const Profile& profile) { return {{"citations", profile.values()}}; }

MergePartition parse_partition(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid partition JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("partition must be an array of arrays of item ids");
  MergePartition partition;
  for (const auto& group : doc) {
    if (!group.is_array()) throw ParseError("partition groups must be arrays");
    Group g;
    for (const auto& id : group) {
      if (!id.is_number_unsigned()) throw ParseError("item ids must be non-negative integers");
      g.push_back(id.get<ItemId>());
    }
    partition.groups.push_back(std::move(g));
  }
  return partition;
}

json partition_to_json(const MergePartition& partition) { return groups_json(partition.groups); }

ThreePartitionInstance parse_3partition(std::string_view text) {
  const auto newline = text.find('\n');
  const auto header = parse_integers(text.substr(0, newline));
  if (header.size() != 2) throw ParseError("3-PARTITION header must be \"m b\"");
  ThreePartitionInstance inst;
  inst.m = header[0];
  inst.b = header[1];
  if (newline != std::string_view::npos) inst.numbers = parse_integers(text.substr(newline + 1));
  if (static_cast<Count>(inst.numbers.size()) != 3 * inst.m) {
    std::ostringstream msg;
    msg << "expected " << 3 * inst.m << " numbers after the header, got " << inst.numbers.size();
    throw ParseError(msg.str());
  }
  return inst;
}

std::string format_3partition(const ThreePartitionInstance& instance) {
  std::ostringstream out;
  out << instance.m << ' ' << instance.b << '\n';
  for (std::size_t i = 0; i < instance.numbers.size(); ++i) {
    if (i) out << ' ';
    out << instance.numbers[i];
  }
  out << '\n';
  return out.str();
}

std::pair<Profile, Count> parse_reduced(std::string_view text) {
  const auto at = text.rfind("k=");
  if (at == std::string_view::npos) throw ParseError("reduced instance lacks a k= line");
  const auto k = parse_integers(text.substr(at + 2));
  if (k.size() != 1) throw ParseError("malformed k= line");
  return {parse_profile(text.substr(0, at)), k[0]};
}

std::string format_reduced(const ReducedInstance& reduced) {
  return format_profile(reduced.profile) + "k=" + std::to_string(reduced.k) + "\n";
}

json to_json(const ValueReport& report) {
  return {{"value", report.value}, {"witness_group_ids", report.witness_group_ids}};
}

json to_json(const Classification& c) {
  return {{"h", c.h},
          {"supercritical_ids", c.supercritical_ids},
          {"critical_ids", c.critical_ids},
          {"tail_ids", c.tail_ids},
          {"rest_ids", c.rest_ids},
          {"rest_sum", c.rest_sum},
          {"overlap", c.overlap}};
}

json to_json(const ImprovementWitness& witness) {
  return {{"partition", partition_to_json(witness.partition)}, {"achieved", witness.achieved}};
}

json to_json(const AchievabilityCertificate& certificate) {
  return {{"k", certificate.k},
          {"partition", partition_to_json(certificate.partition)},
          {"witness_group_ids", certificate.witness_group_ids}};
}

AchievabilityCertificate certificate_from_json(const json& doc) {
  try {
    AchievabilityCertificate cert;
    cert.k = doc.at("k").get<Count>();
    cert.partition = parse_partition(doc.at("partition").dump());
    cert.witness_group_ids = doc.at("witness_group_ids").get<std::vector<std::size_t>>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

json to_json(const MaxResult& result) {
  return {{"value", result.value},
          {"certificate", to_json(result.certificate)},
          {"nodes_explored", result.nodes_explored}};
}

json to_json(const ThreePartitionWitness& witness) {
  json blocks = json::array();
  for (const auto& block : witness.blocks) blocks.push_back(block);
  return {{"blocks", blocks}};
}

json to_json(const ReductionReport& report) {
  json out = {{"k", report.reduced.k},
              {"three_partition", report.three_partition_yes},
              {"achievable", report.achievable_yes},
              {"max_value", report.max_value},
              {"agree", report.agree()},
              {"nodes_explored", report.nodes_explored},
              {"reduced_profile", profile_to_json(report.reduced.profile)}};
  if (report.partition_witness) out["partition_witness"] = to_json(*report.partition_witness);
  if (report.lifted_certificate) out["lifted_certificate"] = to_json(*report.lifted_certificate);
  if (report.solver_certificate) out["solver_certificate"] = to_json(*report.solver_certificate);
  return out;
}

}  // namespace hmerge
