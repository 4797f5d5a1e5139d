#include "cspart/json_io.hpp"

#include <sstream>

#include <json.hpp>

namespace cspart {
namespace {

using ordered_json = nlohmann::ordered_json;

Int to_int(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) {
    std::ostringstream os;
    os << what << " must be an integer";
    throw parse_error(os.str());
  }
  return j.get<Int>();
}

std::vector<Int> to_int_vector(const ordered_json& j, const char* what) {
  if (!j.is_array()) {
    std::ostringstream os;
    os << what << " must be an array of integers";
    throw parse_error(os.str());
  }
  std::vector<Int> out;
  out.reserve(j.size());
  for (const auto& item : j) out.push_back(to_int(item, what));
  return out;
}

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("input is not valid JSON");
  return j;
}

ordered_json finding_to_json(const Finding& f) {
  const char* kind = "not_a_partition";
  if (f.kind == FindingKind::size_mismatch) kind = "size_mismatch";
  if (f.kind == FindingKind::sum_mismatch) kind = "sum_mismatch";
  ordered_json j;
  j["kind"] = kind;
  j["block_index"] = f.block_index;
  j["value"] = f.value;
  j["expected"] = f.expected;
  j["actual"] = f.actual;
  j["message"] = f.message;
  return j;
}

ordered_json record_body(const SweepRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["x"] = r.x;
  j["sizes"] = r.sizes;
  j["magic"] = r.magic ? ordered_json(*r.magic) : ordered_json(nullptr);
  j["predicate_feasible"] = r.predicate_feasible;
  j["oracle_count"] = r.oracle_count;
  j["oracle_capped"] = r.oracle_capped;
  j["construct_succeeded"] = r.construct_succeeded;
  j["construct_budget_exceeded"] = r.construct_budget_exceeded;
  j["fallback_used"] = r.fallback_used;
  j["agree"] = r.agree;
  return j;
}

std::string emit(const ordered_json& j) { return j.dump() + "\n"; }

}  // namespace

std::string partition_to_json(const ConstantSumPartition& partition) {
  const ConstantSumPartition canon = canonicalized(partition);
  ordered_json j;
  j["n"] = canon.n;
  ordered_json sizes = ordered_json::array();
  for (const auto& block : canon.blocks) sizes.push_back(static_cast<Int>(block.size()));
  j["sizes"] = std::move(sizes);
  j["blocks"] = canon.blocks;
  j["magic_constant"] = canon.magic_constant;
  return emit(j);
}

PartitionFile partition_file_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  if (!j.is_object()) throw parse_error("partition file must be a JSON object");
  if (!j.contains("n")) throw parse_error("partition file is missing \"n\"");
  if (!j.contains("blocks")) throw parse_error("partition file is missing \"blocks\"");

  PartitionFile file;
  file.partition.n = to_int(j.at("n"), "\"n\"");
  const auto& blocks = j.at("blocks");
  if (!blocks.is_array()) throw parse_error("\"blocks\" must be an array of arrays");
  for (const auto& block : blocks)
    file.partition.blocks.push_back(to_int_vector(block, "block element"));

  if (j.contains("sizes")) file.sizes = to_int_vector(j.at("sizes"), "\"sizes\"");

  if (j.contains("magic_constant")) {
    file.partition.magic_constant = to_int(j.at("magic_constant"), "\"magic_constant\"");
  } else {
    const Int x = static_cast<Int>(file.partition.blocks.size());
    const Int total = file.partition.n >= 0 ? triangular(file.partition.n) : 0;
    if (x < 1 || total % x != 0)
      throw parse_error("\"magic_constant\" is missing and cannot be derived");
    file.partition.magic_constant = total / x;
  }
  return file;
}

std::string permutation_to_json(const Permutation& perm) {
  ordered_json j;
  j["n"] = perm.degree();
  j["image"] = perm.image();
  return emit(j);
}

Permutation permutation_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  std::vector<Int> image;
  if (j.is_array()) {
    image = to_int_vector(j, "permutation");
  } else if (j.is_object() && j.contains("image")) {
    image = to_int_vector(j.at("image"), "\"image\"");
    if (j.contains("n") && to_int(j.at("n"), "\"n\"") != static_cast<Int>(image.size()))
      throw parse_error("\"n\" does not match the image length");
  } else {
    throw parse_error("permutation file must be an array or an object with \"image\"");
  }
  try {
    return Permutation(std::move(image));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string feasibility_to_json(const FeasibilityReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["x"] = report.x;
  j["sizes"] = report.sizes;
  j["triangular"] = report.triangular_n;
  j["divisible"] = report.divisible;
  j["magic"] = report.magic ? ordered_json(*report.magic) : ordered_json(nullptr);
  ordered_json prefix = ordered_json::array();
  for (const auto& c : report.prefix_checks) {
    ordered_json row;
    row["index"] = c.index;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["ok"] = c.ok;
    prefix.push_back(std::move(row));
  }
  j["prefix_checks"] = std::move(prefix);
  ordered_json floors = ordered_json::array();
  for (const auto& c : report.floor_checks) {
    ordered_json row;
    row["q"] = c.q;
    row["q_sum"] = c.q_sum;
    row["bound"] = c.bound;
    row["ok"] = c.ok;
    floors.push_back(std::move(row));
  }
  j["floor_checks"] = std::move(floors);
  j["feasible"] = report.feasible;
  j["reason"] = report.reason;
  j["witness"] = report.witness ? ordered_json(*report.witness) : ordered_json(nullptr);
  return emit(j);
}

std::string verification_to_json(const VerificationReport& report) {
  ordered_json j;
  j["valid"] = report.valid;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) failures.push_back(finding_to_json(f));
  j["failures"] = std::move(failures);
  return emit(j);
}

std::string enumeration_to_json(const PartitionSpec& spec, const OracleResult& result) {
  ordered_json j;
  j["n"] = spec.n();
  j["x"] = spec.block_count();
  j["sizes"] = spec.sizes();
  const auto magic = magic_constant(spec.n(), spec.block_count());
  j["magic"] = magic ? ordered_json(*magic) : ordered_json(nullptr);
  j["count"] = result.count;
  j["more"] = result.more;
  j["capped"] = result.capped;
  j["nodes"] = result.nodes;
  ordered_json parts = ordered_json::array();
  for (const auto& p : result.partitions) parts.push_back(p.blocks);
  j["partitions"] = std::move(parts);
  return emit(j);
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::ostringstream os;
  os << "n,x,sizes,magic,predicate,oracle_count,capped,construct_ok,fallback_used,agree\n";
  bool all_agree = true;
  for (const auto& r : records) {
    os << r.n << ',' << r.x << ',';
    for (size_t i = 0; i < r.sizes.size(); ++i) {
      if (i) os << ' ';
      os << r.sizes[i];
    }
    os << ',';
    if (r.magic) os << *r.magic;
    os << ',' << (r.predicate_feasible ? "true" : "false") << ',' << r.oracle_count << ','
       << (r.oracle_capped ? "true" : "false") << ','
       << (r.construct_succeeded ? "true" : "false") << ','
       << (r.fallback_used ? "true" : "false") << ',' << (r.agree ? "true" : "false") << '\n';
    all_agree = all_agree && r.agree;
  }
  os << "# all_agree=" << (all_agree ? "true" : "false") << '\n';
  return os.str();
}

std::string sweep_to_json(const std::vector<SweepRecord>& records) {
  bool all_agree = true;
  ordered_json rows = ordered_json::array();
  for (const auto& r : records) {
    rows.push_back(record_body(r));
    all_agree = all_agree && r.agree;
  }
  ordered_json j;
  j["record_count"] = static_cast<Int>(records.size());
  j["all_agree"] = all_agree;
  j["records"] = std::move(rows);
  return emit(j);
}

std::string sweep_record_to_json(const SweepRecord& record) {
  ordered_json j;
  j["kind"] = "sweep-disagreement";
  const ordered_json body = record_body(record);
  for (const auto& [key, value] : body.items()) j[key] = value;
  return emit(j);
}

}  // namespace cspart
