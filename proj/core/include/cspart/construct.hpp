#pragma once

#include <cstdint>

#include "cspart/feasibility.hpp"
#include "cspart/types.hpp"

namespace cspart {

// Node budgets for the backtracking searches. A node is one extension attempt;
// exhausting a budget is a distinct outcome, never misreported as infeasible.
struct SearchLimits {
  std::uint64_t construct_nodes = 10'000'000;
  std::uint64_t oracle_nodes = 100'000'000;
};

// The descending-lexicographically greatest k-subset of pool summing to
// target, or nullopt when no such subset exists. Pool elements must be
// distinct positive integers (any order); the result is descending.
// Throws budget_exceeded if the search uses more than node_budget nodes.
std::optional<std::vector<Int>> select_block(
    const std::vector<Int>& pool, Int k, Int target,
    std::uint64_t node_budget = SearchLimits{}.construct_nodes);

enum class ConstructStatus { solved, infeasible, budget_exceeded, construction_failure };

struct ConstructResult {
  ConstructStatus status = ConstructStatus::infeasible;
  std::optional<ConstantSumPartition> partition;  // canonical when solved
  FeasibilityReport feasibility;
  // True when the pure block-by-block greedy chain (each block taking its
  // descending-lex greatest selection, never revisited) does not produce the
  // returned partition, i.e. backtracking across blocks had to fire.
  bool fallback_used = false;
  std::uint64_t nodes = 0;
};

// Builds a partition for the spec, or establishes why there is none. Blocks
// are filled smallest cardinality first, each via the descending-lex greatest
// selection that still leaves the remaining sizes completable; the last block
// is the untouched remainder of the pool.
ConstructResult construct(const PartitionSpec& spec,
                          std::uint64_t node_budget = SearchLimits{}.construct_nodes);

// Free-size mode: choose the cardinalities too. Tries the balanced multiset
// (sizes in {floor(n/x), ceil(n/x)}) first, then every nondecreasing multiset
// in lexicographic order. Balanced prefix sums dominate every other multiset's,
// so the fallback scan is belt-and-braces: if balanced fails the predicate,
// everything else does as well.
ConstructResult construct_free(Int n, Int x,
                               std::uint64_t node_budget = SearchLimits{}.construct_nodes);

// Checks a candidate: (a) blocks partition {1..n} exactly, (b) when a spec is
// given, block cardinalities match it, (c) every block sums to the stated
// magic constant and x * magic == triangular(n). Findings carry the offending
// element / canonical block index and the expected vs actual numbers.
VerificationReport verify(const ConstantSumPartition& candidate,
                          const PartitionSpec* spec = nullptr);

}  // namespace cspart
