#include "hmerge/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hmerge/achievability.hpp"
#include "hmerge/improvement.hpp"
#include "hmerge/io.hpp"
#include "hmerge/oracle_check.hpp"
#include "hmerge/reduction.hpp"

namespace hmerge::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string format = "human";
  std::uint64_t node_budget = NodeBudget::kDefaultLimit;
  std::size_t oracle_cap = SearchLimits{}.oracle_cap;
  std::uint64_t seed = 42;

  bool structured() const { return format == "json"; }
  SearchLimits limits() const { return {node_budget, oracle_cap}; }
};

struct ProfileSource {
  std::string path;
  std::optional<std::string> values;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", path, "Profile file; '-' or omitted reads stdin");
    cmd->add_option("--values", values, "Inline profile, e.g. \"5 4 3 3 3 2\"");
  }
};

std::string read_all(std::istream& stream) {
  std::ostringstream buf;
  buf << stream.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open " + path);
  return read_all(file);
}

Profile load_profile(const ProfileSource& src, std::istream& in) {
  if (src.values) return parse_profile(*src.values);
  return parse_profile(read_file(src.path, in));
}

std::string describe(const Profile& profile, const MergePartition& partition) {
  std::ostringstream out;
  for (std::size_t g = 0; g < partition.groups.size(); ++g) {
    if (g) out << ' ';
    out << '{';
    const auto& group = partition.groups[g];
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out << ' ';
      out << profile.citations(group[i]);
    }
    out << '}';
  }
  return out.str();
}

void print_certificate(std::ostream& out, const Profile& profile,
                       const AchievabilityCertificate& cert) {
  const auto sums = group_sums(profile, cert.partition);
  out << "partition: " << describe(profile, cert.partition) << '\n';
  out << "item ids: " << partition_to_json(cert.partition).dump() << '\n';
  out << "witness groups (sum >= " << cert.k << "):";
  for (auto g : cert.witness_group_ids) out << ' ' << g << "[" << sums[g] << "]";
  out << '\n';
}

int cmd_hindex(const RunConfig& cfg, const ProfileSource& src, std::istream& in,
               std::ostream& out) {
  const Profile profile = load_profile(src, in);
  const Count h = h_index(profile);
  if (cfg.structured()) {
    out << json{{"h_index", h}}.dump() << '\n';
  } else {
    out << h << '\n';
  }
  return kOk;
}

int cmd_improve(const RunConfig& cfg, const ProfileSource& src, std::istream& in,
                std::ostream& out) {
  const Profile profile = load_profile(src, in);
  const Classification c = classify(profile);
  const auto witness = improving_partition(profile);
  if (cfg.structured()) {
    json doc = {{"h_index", c.h}, {"improvable", witness.has_value()},
                {"classification", to_json(c)}};
    if (witness) doc["witness"] = to_json(*witness);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "h-index: " << c.h << '\n';
  if (!witness) {
    out << "not improvable\n";
    return kOk;
  }
  out << "improvable: yes\n";
  out << "achieved: " << witness->achieved << '\n';
  out << "partition: " << describe(profile, witness->partition) << '\n';
  out << "item ids: " << partition_to_json(witness->partition).dump() << '\n';
  return kOk;
}

int cmd_achieve(const RunConfig& cfg, const ProfileSource& src, Count k, std::istream& in,
                std::ostream& out) {
  const Profile profile = load_profile(src, in);
  NodeBudget budget(cfg.node_budget);
  const auto start = std::chrono::steady_clock::now();
  const auto cert = is_achievable(profile, k, budget);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (cfg.structured()) {
    json doc = {{"k", k}, {"achievable", cert.has_value()}, {"nodes_explored", budget.used()}};
    if (cert) doc["certificate"] = to_json(*cert);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "k=" << k << ": " << (cert ? "YES" : "NO") << '\n';
  if (cert) print_certificate(out, profile, *cert);
  out << "nodes explored: " << budget.used() << '\n';
  out << "wall time: "
      << std::chrono::duration<double, std::milli>(elapsed).count() << " ms\n";
  return kOk;
}

int cmd_maximize(const RunConfig& cfg, const ProfileSource& src, std::istream& in,
                 std::ostream& out) {
  const Profile profile = load_profile(src, in);
  const auto start = std::chrono::steady_clock::now();
  const MaxResult result = max_achievable(profile, cfg.limits());
  const auto elapsed = std::chrono::steady_clock::now() - start;
  if (cfg.structured()) {
    json doc = to_json(result);
    doc["h_index"] = h_index(profile);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "max h-index: " << result.value << " (without merging: " << h_index(profile)
      << ")\n";
  print_certificate(out, profile, result.certificate);
  out << "nodes explored: " << result.nodes_explored << '\n';
  out << "wall time: "
      << std::chrono::duration<double, std::milli>(elapsed).count() << " ms\n";
  return kOk;
}

int cmd_reduce3p(const RunConfig& cfg, const std::string& path, const std::string& output,
                 std::istream& in, std::ostream& out) {
  const auto instance = parse_3partition(read_file(path, in));
  const ReducedInstance reduced = reduce_3partition(instance);
  std::string text;
  if (cfg.structured()) {
    json doc = profile_to_json(reduced.profile);
    doc["k"] = reduced.k;
    doc["padding_count"] = reduced.padding_count;
    doc["in_range"] = instance.in_range();
    text = doc.dump() + "\n";
  } else {
    text = format_reduced(reduced);
  }
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream file(output);
    if (!file) throw ParseError("cannot write " + output);
    file << text;
  }
  return kOk;
}

int cmd_verify3p(const RunConfig& cfg, const std::string& path, std::istream& in,
                 std::ostream& out) {
  const auto instance = parse_3partition(read_file(path, in));
  const ReductionReport report = verify_reduction(instance, cfg.limits());
  if (cfg.structured()) {
    out << to_json(report).dump() << '\n';
  } else {
    out << "3-PARTITION (m=" << instance.m << ", b=" << instance.b
        << "): " << (report.three_partition_yes ? "YES" : "NO") << '\n';
    out << "achievability (k=" << report.reduced.k
        << "): " << (report.achievable_yes ? "YES" : "NO") << " (max " << report.max_value
        << ")\n";
    out << "agreement: " << (report.agree() ? "yes" : "NO") << '\n';
    if (report.partition_witness) {
      out << "3-PARTITION blocks: " << to_json(*report.partition_witness)["blocks"].dump()
          << '\n';
    }
    if (report.solver_certificate) {
      print_certificate(out, report.reduced.profile, *report.solver_certificate);
    }
  }
  return report.agree() ? kOk : kOracleMismatch;
}

int cmd_oracle_check(const RunConfig& cfg, OracleCheckParams params, std::ostream& out) {
  params.seed = cfg.seed;
  params.limits = cfg.limits();
  const OracleCheckReport report = run_oracle_check(params);
  if (cfg.structured()) {
    out << json{{"instances", report.instances},
                {"improve_mismatches", report.improve_mismatches},
                {"max_mismatches", report.max_mismatches},
                {"witness_failures", report.witness_failures},
                {"failures", report.failures},
                {"passed", report.passed()}}
               .dump()
        << '\n';
  } else {
    out << "mode: "
        << (params.count == 0 ? "exhaustive" : "random x" + std::to_string(params.count))
        << " (size <= " << params.max_size << ", values <= " << params.max_value << ")\n";
    out << "instances: " << report.instances << '\n';
    out << "improvement mismatches: " << report.improve_mismatches << '\n';
    out << "maximization mismatches: " << report.max_mismatches << '\n';
    out << "unsound witnesses: " << report.witness_failures << '\n';
    for (const auto& f : report.failures) out << "failed on: " << json(f).dump() << '\n';
    out << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  }
  return report.passed() ? kOk : kOracleMismatch;
}

struct GenProfileArgs {
  std::size_t n = 10;
  std::string dist = "uniform";
  Count lo = 1;
  Count hi = 10;
  double exponent = 1.0;
  Count max = 100;
};

int cmd_gen_profile(const RunConfig& cfg, const GenProfileArgs& a, std::ostream& out) {
  CitationDistribution dist = UniformCitations{a.lo, a.hi};
  if (a.dist == "zipf") dist = ZipfCitations{a.exponent, a.max};
  const Profile profile = gen_profile(a.n, dist, cfg.seed);
  out << (cfg.structured() ? profile_to_json(profile).dump() + "\n" : format_profile(profile));
  return kOk;
}

int cmd_gen_3p(const RunConfig& cfg, Count m, Count b, std::ostream& out) {
  const auto instance = gen_3partition_instance(m, b, cfg.seed);
  if (cfg.structured()) {
    out << json{{"m", instance.m}, {"b", instance.b}, {"numbers", instance.numbers}}.dump()
        << '\n';
  } else {
    out << format_3partition(instance);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Merge-manipulation analysis of citation profiles", "hmerge"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--node-budget", cfg.node_budget, "Exact-search node budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--oracle-cap", cfg.oracle_cap, "Largest profile for exhaustive enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for randomized commands");

  ProfileSource hindex_src, improve_src, achieve_src, maximize_src;
  auto* hindex = app.add_subcommand("hindex", "Print the H-index of a profile");
  hindex_src.attach(hindex);
  auto* improve = app.add_subcommand("improve", "Find a merge that raises the H-index");
  improve_src.attach(improve);
  auto* achieve = app.add_subcommand("achieve", "Decide whether merging reaches H-index k");
  achieve_src.attach(achieve);
  Count k = 0;
  achieve->add_option("--k", k, "Target H-index")->required()->check(CLI::NonNegativeNumber);
  auto* maximize = app.add_subcommand("maximize", "Largest H-index reachable by merging");
  maximize_src.attach(maximize);

  std::string reduce_path, reduce_out, verify_path;
  auto* reduce3p = app.add_subcommand("reduce3p", "Reduce a 3-PARTITION instance");
  reduce3p->add_option("instance", reduce_path, "Instance file; '-' reads stdin");
  reduce3p->add_option("-o,--output", reduce_out, "Write the reduced instance here");
  auto* verify3p = app.add_subcommand("verify3p", "Solve both sides of the reduction");
  verify3p->add_option("instance", verify_path, "Instance file; '-' reads stdin");

  OracleCheckParams oracle;
  auto* oracle_check =
      app.add_subcommand("oracle-check", "Compare solvers with exhaustive enumeration");
  oracle_check->add_option("--max-size", oracle.max_size, "Largest profile size");
  oracle_check->add_option("--max-value", oracle.max_value, "Largest citation count")
      ->check(CLI::PositiveNumber);
  oracle_check->add_option("--count", oracle.count, "Random profiles; 0 = exhaustive");

  auto* gen = app.add_subcommand("gen", "Generate seeded instances");
  gen->require_subcommand(1);
  GenProfileArgs gp;
  auto* gen_profile_cmd = gen->add_subcommand("profile", "Random citation profile");
  gen_profile_cmd->add_option("--n", gp.n, "Number of items");
  gen_profile_cmd->add_option("--dist", gp.dist, "Distribution")
      ->check(CLI::IsMember({"uniform", "zipf"}));
  gen_profile_cmd->add_option("--lo", gp.lo, "Uniform lower bound");
  gen_profile_cmd->add_option("--hi", gp.hi, "Uniform upper bound");
  gen_profile_cmd->add_option("--exponent", gp.exponent, "Zipf exponent");
  gen_profile_cmd->add_option("--max", gp.max, "Zipf largest value");
  Count gen_m = 2, gen_b = 10;
  auto* gen_3p = gen->add_subcommand("3p", "Random in-range 3-PARTITION instance");
  gen_3p->add_option("--m", gen_m, "Number of blocks");
  gen_3p->add_option("--b", gen_b, "Block sum");
  gen->fallthrough();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (hindex->parsed()) return cmd_hindex(cfg, hindex_src, in, out);
    if (improve->parsed()) return cmd_improve(cfg, improve_src, in, out);
    if (achieve->parsed()) return cmd_achieve(cfg, achieve_src, k, in, out);
    if (maximize->parsed()) return cmd_maximize(cfg, maximize_src, in, out);
    if (reduce3p->parsed()) return cmd_reduce3p(cfg, reduce_path, reduce_out, in, out);
    if (verify3p->parsed()) return cmd_verify3p(cfg, verify_path, in, out);
    if (oracle_check->parsed()) return cmd_oracle_check(cfg, oracle, out);
    if (gen_profile_cmd->parsed()) return cmd_gen_profile(cfg, gp, out);
    if (gen_3p->parsed()) return cmd_gen_3p(cfg, gen_m, gen_b, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const MalformedInstance& e) {
    err << "malformed instance: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidParameters& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const OracleCapExceeded& e) {
    err << "instance too large: " << e.what() << '\n';
    return kBudgetExceeded;
  }
  err << "error: no command given\n";
  return kUsage;
}

}  // namespace hmerge::cli
