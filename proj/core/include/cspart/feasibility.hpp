#pragma once

#include "cspart/types.hpp"

namespace cspart {

// Decides whether a constant-sum partition with the spec's cardinalities
// exists. The verdict is: triangular(n) divisible by x AND, for every i,
// i*M <= top_sum(n, N_i) where N_i is the i-th prefix sum of the sizes.
// All prefix checks are recorded even past the first failure; the witness is
// the first violated index. The floor diagnostics ride along for reporting.
FeasibilityReport check_feasibility(const PartitionSpec& spec);

// Floor diagnostics over the leading equal-size run n_1 = ... = n_p: for each
// q in 1..p, M must not exceed floor(top_sum(n, q*n_1) / q). Implied by the
// prefix checks whenever M is integral (the sweep asserts that empirically),
// so a failure here certifies infeasibility but never adds information.
// Returns an empty list when x does not divide triangular(n).
std::vector<FloorCheck> floor_bound_checks(const PartitionSpec& spec);

// Size-multiset utilities. A size multiset is a nondecreasing vector of x
// positive entries summing to n; the lexicographic order below is over those
// vectors. Requires n > x >= 2 in all of them.

// x - (n mod x) entries of floor(n/x) followed by n mod x entries of
// ceil(n/x). Its prefix sums dominate every other multiset's, which makes it
// the feasibility-maximal choice of cardinalities.
std::vector<Int> balanced_sizes(Int n, Int x);

// Lexicographically first multiset: [1, ..., 1, n-x+1].
std::vector<Int> first_size_multiset(Int n, Int x);

// Advances to the lexicographic successor in place; false at the end.
bool next_size_multiset(std::vector<Int>& sizes, Int n);

// All multisets in lexicographic order. Intended for small n (sweeps, tests).
std::vector<std::vector<Int>> size_multisets(Int n, Int x);

}  // namespace cspart
