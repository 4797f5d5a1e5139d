// cspart: constant-sum partitions of {1..n} from the command line.
//
// Exit codes, uniform across subcommands:
//   0  success (feasible / solved / valid / counts agree)
//   1  negative verdict: infeasible spec, invalid candidate, empty
//      enumeration, non-magic permutation, or a sweep disagreement
//   2  usage, input, or I/O problem
//   3  a node budget ran out before the question was settled

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cspart/construct.hpp"
#include "cspart/feasibility.hpp"
#include "cspart/json_io.hpp"
#include "cspart/oracle.hpp"
#include "cspart/permutation.hpp"
#include "cspart/types.hpp"

namespace {

using cspart::Int;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
  if (!out) throw UsageError("cannot write " + path);
}

// "-" means stdout
void write_output(const std::string& path, const std::string& content) {
  if (path == "-")
    std::cout << content;
  else
    write_file(path, content);
}

cspart::SearchLimits limits_from_env() {
  cspart::SearchLimits limits;
  const char* raw = std::getenv("CSP_NODE_BUDGET");
  if (!raw) return limits;
  const std::string text(raw);
  std::uint64_t value = 0;
  std::size_t used = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError("CSP_NODE_BUDGET must be a positive integer, got \"" + text + "\"");
  }
  if (used != text.size() || value == 0 || text[0] == '-')
    throw UsageError("CSP_NODE_BUDGET must be a positive integer, got \"" + text + "\"");
  limits.construct_nodes = value;
  limits.oracle_nodes = value;
  return limits;
}

cspart::PartitionSpec spec_from(Int n, const std::vector<Int>& sizes, Int x) {
  if (sizes.empty() && x == 0) throw UsageError("give --sizes or --x");
  if (!sizes.empty()) return cspart::PartitionSpec(n, sizes);
  return cspart::PartitionSpec(n, cspart::balanced_sizes(n, x));
}

int run_check(Int n, const std::vector<Int>& sizes, Int x, bool as_json) {
  const cspart::PartitionSpec spec = spec_from(n, sizes, x);
  const cspart::FeasibilityReport report = cspart::check_feasibility(spec);
  if (as_json) {
    std::cout << cspart::feasibility_to_json(report);
  } else {
    std::cout << spec.describe() << "\n";
    if (report.feasible)
      std::cout << "feasible, magic constant " << *report.magic << "\n";
    else
      std::cout << "infeasible: " << report.reason << "\n";
  }
  return report.feasible ? 0 : 1;
}

int run_solve(Int n, const std::vector<Int>& sizes, Int x, const std::string& out,
              const cspart::SearchLimits& limits) {
  if (sizes.empty() && x == 0) throw UsageError("give --sizes or --x");
  const cspart::ConstructResult result =
      sizes.empty() ? cspart::construct_free(n, x, limits.construct_nodes)
                    : cspart::construct(cspart::PartitionSpec(n, sizes), limits.construct_nodes);
  switch (result.status) {
    case cspart::ConstructStatus::solved:
      write_output(out, cspart::partition_to_json(*result.partition));
      return 0;
    case cspart::ConstructStatus::infeasible:
      std::cerr << "infeasible: " << result.feasibility.reason << "\n";
      return 1;
    case cspart::ConstructStatus::budget_exceeded:
      std::cerr << "node budget exhausted after " << result.nodes
                << " nodes; raise CSP_NODE_BUDGET\n";
      return 3;
    case cspart::ConstructStatus::construction_failure:
      // the predicate said yes but the exhaustive search found nothing: that
      // is a bug worth a durable artifact, not just a message
      write_file("cspart-construction-failure.json",
                 cspart::feasibility_to_json(result.feasibility));
      std::cerr << "construction failed on a feasible spec; "
                   "diagnostic written to cspart-construction-failure.json\n";
      return 1;
  }
  return 2;
}

int run_enumerate(Int n, const std::vector<Int>& sizes, Int limit, bool limit_set, bool as_json,
                  const cspart::SearchLimits& limits) {
  const cspart::PartitionSpec spec(n, sizes);
  const std::optional<Int> cap = limit_set ? std::optional<Int>(limit) : std::nullopt;
  const cspart::OracleResult result = cspart::oracle_enumerate(spec, cap, limits.oracle_nodes);
  if (as_json) {
    std::cout << cspart::enumeration_to_json(spec, result);
  } else {
    std::cout << "count = " << result.count;
    if (result.more) std::cout << " (more exist)";
    if (result.capped) std::cout << " (search capped)";
    std::cout << "\n";
    for (const auto& p : result.partitions) std::cout << cspart::partition_to_json(p);
  }
  if (result.capped && result.count == 0) return 3;
  return result.count > 0 ? 0 : 1;
}

int run_verify(const std::string& path, const std::vector<Int>& size_override, bool as_json) {
  const cspart::PartitionFile file = cspart::partition_file_from_json(read_file(path));
  std::optional<cspart::PartitionSpec> spec;
  const std::vector<Int>& sizes = size_override.empty() && file.sizes ? *file.sizes
                                                                      : size_override;
  if (!sizes.empty()) spec.emplace(file.partition.n, sizes);
  const cspart::VerificationReport report =
      cspart::verify(file.partition, spec ? &*spec : nullptr);
  if (as_json) {
    std::cout << cspart::verification_to_json(report);
  } else if (report.valid) {
    std::cout << "valid\n";
  } else {
    std::cout << "invalid, " << report.failures.size() << " finding(s)\n";
    for (const auto& f : report.failures) {
      std::cout << "  " << f.message;
      if (f.block_index > 0) std::cout << " [block " << f.block_index << "]";
      if (f.kind != cspart::FindingKind::not_a_partition || f.value != 0)
        std::cout << " (value " << f.value << ", expected " << f.expected << ", actual "
                  << f.actual << ")";
      std::cout << "\n";
    }
  }
  return report.valid ? 0 : 1;
}

int run_perm_verify(const std::string& perm_path, const std::string& part_path, bool strict,
                    bool as_json) {
  const cspart::Permutation perm = cspart::permutation_from_json(read_file(perm_path));
  const cspart::PartitionFile file = cspart::partition_file_from_json(read_file(part_path));
  const cspart::MagicMode mode = strict ? cspart::MagicMode::strict : cspart::MagicMode::loose;
  const bool magic = cspart::is_magic_partition_permutation(perm, file.partition, mode);
  if (as_json) {
    std::ostringstream os;
    os << "{\"magic\":" << (magic ? "true" : "false") << ",\"mode\":\""
       << (strict ? "strict" : "loose") << "\"}\n";
    std::cout << os.str();
  } else {
    std::cout << (magic ? "magic" : "not magic") << " (" << (strict ? "strict" : "loose")
              << ")\n";
  }
  return magic ? 0 : 1;
}

int run_perm_count(const std::string& part_path, const std::string& method,
                   const cspart::SearchLimits& limits) {
  const cspart::PartitionFile file = cspart::partition_file_from_json(read_file(part_path));
  const cspart::CountMethod m =
      method == "brute" ? cspart::CountMethod::brute : cspart::CountMethod::formula;
  std::cout << cspart::count_magic_partition_permutations(file.partition, m, limits.oracle_nodes)
            << "\n";
  return 0;
}

int run_sweep(Int n_max, const std::string& out, bool as_json,
              const cspart::SearchLimits& limits) {
  const std::vector<cspart::SweepRecord> records = cspart::sweep_equivalence(n_max, limits);
  write_output(out, as_json ? cspart::sweep_to_json(records) : cspart::sweep_to_csv(records));
  int disagreements = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    if (records[i].agree) continue;
    std::ostringstream name;
    name << "sweep-disagreement-" << i << ".json";
    write_file(name.str(), cspart::sweep_record_to_json(records[i]));
    std::cerr << "disagreement at record " << i << ", details in " << name.str() << "\n";
    ++disagreements;
  }
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constant-sum partitions of {1..n}: feasibility, construction, "
               "enumeration, verification, magic partition permutations"};
  app.require_subcommand(1);

  Int n = 0;
  Int x = 0;
  std::vector<Int> sizes;
  std::vector<Int> size_override;
  Int limit = 0;
  bool as_json = false;
  bool strict = false;
  std::string in_path;
  std::string perm_path;
  std::string out_path = "-";
  std::string method = "formula";
  Int n_max = 0;

  auto* check = app.add_subcommand("check", "decide feasibility of a cardinality spec");
  check->add_option("-n,--n", n, "ground set size")->required();
  auto* check_sizes = check->add_option("--sizes", sizes, "block cardinalities")->delimiter(',');
  check->add_option("-x,--x", x,
                    "number of blocks; checks the balanced cardinalities, which are "
                    "feasible exactly when some cardinality choice is")
      ->excludes(check_sizes);
  check->add_flag("--json", as_json, "emit the full report as JSON");

  auto* solve = app.add_subcommand("solve", "build a partition, or say why none exists");
  solve->add_option("-n,--n", n, "ground set size")->required();
  auto* solve_sizes = solve->add_option("--sizes", sizes, "block cardinalities")->delimiter(',');
  solve->add_option("-x,--x", x, "number of blocks, cardinalities chosen automatically")
      ->excludes(solve_sizes);
  solve->add_option("-o,--out", out_path, "output file, - for stdout");

  auto* enumerate = app.add_subcommand("enumerate", "list every matching partition");
  enumerate->add_option("-n,--n", n, "ground set size")->required();
  enumerate->add_option("--sizes", sizes, "block cardinalities")->delimiter(',')->required();
  auto* limit_opt =
      enumerate->add_option("--limit", limit, "stop after this many, 0 probes existence");
  enumerate->add_flag("--json", as_json, "emit one JSON object instead of lines");

  auto* verify = app.add_subcommand("verify", "check a partition file");
  verify->add_option("file", in_path, "partition JSON file")->required();
  verify->add_option("--sizes", size_override, "expected cardinalities, overrides the file")
      ->delimiter(',');
  verify->add_flag("--json", as_json, "emit the report as JSON");

  auto* perm = app.add_subcommand("perm", "magic partition permutation tools");
  perm->require_subcommand(1);
  auto* perm_verify = perm->add_subcommand("verify", "test a permutation against a partition");
  perm_verify->add_option("--perm", perm_path, "permutation JSON file")->required();
  perm_verify->add_option("--partition", in_path, "partition JSON file")->required();
  perm_verify->add_flag("--strict", strict, "require the image family to be the partition");
  perm_verify->add_flag("--json", as_json, "emit the verdict as JSON");
  auto* perm_count = perm->add_subcommand("count", "count the magic permutations");
  perm_count->add_option("--partition", in_path, "partition JSON file")->required();
  perm_count->add_option("--method", method, "brute or formula")
      ->check(CLI::IsMember({"brute", "formula"}));

  auto* sweep = app.add_subcommand("sweep", "cross-check predicate, oracle and constructor");
  sweep->add_option("--n-max", n_max, "run every instance with 3 <= n <= n-max")->required();
  sweep->add_option("-o,--out", out_path, "output file, - for stdout");
  sweep->add_flag("--json", as_json, "emit JSON instead of CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const cspart::SearchLimits limits = limits_from_env();
    if (*check) return run_check(n, sizes, x, as_json);
    if (*solve) return run_solve(n, sizes, x, out_path, limits);
    if (*enumerate)
      return run_enumerate(n, sizes, limit, limit_opt->count() > 0, as_json, limits);
    if (*verify) return run_verify(in_path, size_override, as_json);
    if (*perm_verify) return run_perm_verify(perm_path, in_path, strict, as_json);
    if (*perm_count) return run_perm_count(in_path, method, limits);
    if (*sweep) return run_sweep(n_max, out_path, as_json, limits);
  } catch (const cspart::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
