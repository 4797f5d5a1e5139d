#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cspart/construct.hpp"
#include "cspart/feasibility.hpp"
#include "cspart/types.hpp"

namespace cspart {

struct OracleResult {
  std::vector<ConstantSumPartition> partitions;  // canonical, sorted, distinct
  Int count = 0;                                 // == partitions.size()
  // True when a limit was given and at least limit + 1 partitions exist; the
  // witness beyond the limit is discarded, partitions holds exactly limit.
  bool more = false;
  // True when the node budget ran out first; count is then a lower bound.
  bool capped = false;
  std::uint64_t nodes = 0;
};

// Exhaustive enumeration of every constant-sum partition matching the spec,
// independent of the constructive solver: elements are placed largest first
// into blocks, and among equal-size blocks still empty only the lowest index
// may open, so each unordered partition appears exactly once. limit = k stops
// the search as soon as k + 1 partitions are found (limit = 0 is a pure
// existence probe). No limit means enumerate everything.
OracleResult oracle_enumerate(const PartitionSpec& spec,
                              std::optional<Int> limit = std::nullopt,
                              std::uint64_t node_budget = SearchLimits{}.oracle_nodes);

// One row of the predicate / oracle / constructor cross-check.
struct SweepRecord {
  Int n = 0;
  Int x = 0;
  std::vector<Int> sizes;
  bool predicate_feasible = false;
  std::optional<Int> magic;
  Int oracle_count = 0;
  bool oracle_capped = false;
  bool construct_succeeded = false;
  bool construct_budget_exceeded = false;
  bool fallback_used = false;
  // predicate, oracle and constructor all tell the same story; comparisons
  // whose side ran out of budget are skipped rather than counted as conflicts.
  bool agree = false;
};

// Runs every instance with 3 <= n <= n_max, 2 <= x < n, over every
// nondecreasing size multiset, comparing the feasibility predicate against the
// oracle's count and the constructor's outcome. Throws std::invalid_argument
// unless 3 <= n_max <= 16 (the oracle is exponential in n).
std::vector<SweepRecord> sweep_equivalence(Int n_max, SearchLimits limits = {});

}  // namespace cspart
