#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cspart {

// All quantities are exact 64-bit signed integers. triangular(n) fits for any
// n <= 2^32 - 1; anything wider throws instead of wrapping.
using Int = std::int64_t;

class invalid_spec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class dimension_mismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class budget_exceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// n(n+1)/2. Throws std::invalid_argument for n < 0, std::overflow_error when the
// result would not fit in Int.
Int triangular(Int n);

// Sum of the k largest elements of {1..n}, i.e. triangular(n) - triangular(n-k).
// Requires 0 <= k <= n.
Int top_sum(Int n, Int k);

// triangular(n)/x when x divides triangular(n), otherwise nullopt.
// Requires n > x >= 2.
std::optional<Int> magic_constant(Int n, Int x);

// Checked arithmetic helpers; throw std::overflow_error on wrap.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

// A problem instance: partition {1..n} into blocks of the given cardinalities,
// every block summing to the same value. Sizes are stored canonically
// nondecreasing regardless of the order handed in.
class PartitionSpec {
public:
  PartitionSpec(Int n, std::vector<Int> sizes);

  Int n() const { return n_; }
  Int block_count() const { return static_cast<Int>(sizes_.size()); }
  const std::vector<Int>& sizes() const { return sizes_; }
  // prefix_sums()[i] = sizes_[0] + ... + sizes_[i]; last entry equals n.
  const std::vector<Int>& prefix_sums() const { return prefix_; }

  std::string describe() const;

private:
  Int n_ = 0;
  std::vector<Int> sizes_;
  std::vector<Int> prefix_;
};

// A (claimed) constant-sum partition. Plain data on purpose: verify() must be
// able to inspect broken candidates, so no invariants are enforced here.
struct ConstantSumPartition {
  Int n = 0;
  std::vector<std::vector<Int>> blocks;
  Int magic_constant = 0;

  bool operator==(const ConstantSumPartition&) const = default;
};

// Canonical form: elements inside a block descending; blocks ordered by size
// ascending, ties broken by larger leading element first. Idempotent.
ConstantSumPartition canonicalized(ConstantSumPartition p);

// Total order on canonical blocks/partitions; used for deterministic output.
bool block_less(const std::vector<Int>& a, const std::vector<Int>& b);
bool partition_less(const ConstantSumPartition& a, const ConstantSumPartition& b);

struct PrefixCheck {
  Int index = 0;  // i, 1-based
  Int lhs = 0;    // i * M
  Int rhs = 0;    // top_sum(n, N_i)
  bool ok = false;

  bool operator==(const PrefixCheck&) const = default;
};

struct FloorCheck {
  Int q = 0;      // leading equal-size run position, 1-based
  Int q_sum = 0;  // Q_q = top_sum(n, q * n_1)
  Int bound = 0;  // floor(Q_q / q)
  bool ok = false;

  bool operator==(const FloorCheck&) const = default;
};

struct FeasibilityReport {
  Int n = 0;
  Int x = 0;
  std::vector<Int> sizes;
  Int triangular_n = 0;
  bool divisible = false;
  std::optional<Int> magic;
  std::vector<PrefixCheck> prefix_checks;  // empty when not divisible
  std::vector<FloorCheck> floor_checks;    // empty when not divisible
  bool feasible = false;
  std::string reason;           // empty when feasible
  std::optional<Int> witness;   // first violated prefix index, when one exists

  bool operator==(const FeasibilityReport&) const = default;
};

enum class FindingKind { not_a_partition, size_mismatch, sum_mismatch };

struct Finding {
  FindingKind kind = FindingKind::not_a_partition;
  Int block_index = -1;  // canonical block position (1-based) for size/sum findings
  Int value = 0;         // offending element for not_a_partition findings
  Int expected = 0;
  Int actual = 0;
  std::string message;
};

struct VerificationReport {
  bool valid = false;
  std::vector<Finding> failures;
};

}  // namespace cspart
