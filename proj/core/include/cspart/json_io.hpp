#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cspart/construct.hpp"
#include "cspart/oracle.hpp"
#include "cspart/permutation.hpp"
#include "cspart/types.hpp"

namespace cspart {

class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Partition file format (one JSON object, compact, newline-terminated):
//   {"n":10,"sizes":[2,2,2,2,2],"blocks":[[10,1],...],"magic_constant":11}
// Serialization always canonicalizes; key order and byte layout are fixed so
// identical partitions serialize to identical bytes.
std::string partition_to_json(const ConstantSumPartition& partition);

struct PartitionFile {
  ConstantSumPartition partition;
  std::optional<std::vector<Int>> sizes;  // the sizes stated in the file, if any
};

// Accepts the format above. "sizes" is optional and reported back verbatim;
// "magic_constant" may be omitted when triangular(n) is divisible by the block
// count, in which case the quotient is filled in. Throws parse_error on
// malformed input.
PartitionFile partition_file_from_json(const std::string& text);

// Permutation files: {"n":4,"image":[2,1,4,3]} or a bare array [2,1,4,3].
std::string permutation_to_json(const Permutation& perm);
Permutation permutation_from_json(const std::string& text);

// Report serializers. Deterministic key order, compact, newline-terminated;
// absent optionals serialize as null.
std::string feasibility_to_json(const FeasibilityReport& report);
std::string verification_to_json(const VerificationReport& report);
std::string enumeration_to_json(const PartitionSpec& spec, const OracleResult& result);

// Sweep output. CSV columns:
//   n,x,sizes,magic,predicate,oracle_count,capped,construct_ok,fallback_used,agree
// with sizes space-joined, magic blank when undefined, and a final comment
// line "# all_agree=true|false".
std::string sweep_to_csv(const std::vector<SweepRecord>& records);
std::string sweep_to_json(const std::vector<SweepRecord>& records);
// Single-record artifact written when a sweep row disagrees.
std::string sweep_record_to_json(const SweepRecord& record);

}  // namespace cspart
