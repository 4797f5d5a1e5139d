#include "cspart/feasibility.hpp"

#include <sstream>

namespace cspart {

std::vector<Int> balanced_sizes(Int n, Int x) {
  if (x < 2 || n <= x) throw invalid_spec("balanced_sizes: need n > x >= 2");
  const Int floor_part = n / x;
  const Int rem = n % x;
  std::vector<Int> sizes(static_cast<size_t>(x), floor_part);
  for (Int i = x - rem; i < x; ++i) sizes[static_cast<size_t>(i)] = floor_part + 1;
  return sizes;
}

std::vector<Int> first_size_multiset(Int n, Int x) {
  if (x < 2 || n <= x) throw invalid_spec("first_size_multiset: need n > x >= 2");
  std::vector<Int> sizes(static_cast<size_t>(x), 1);
  sizes.back() = n - (x - 1);
  return sizes;
}

bool next_size_multiset(std::vector<Int>& sizes, Int n) {
  const Int x = static_cast<Int>(sizes.size());
  Int prefix = 0;
  for (Int i = 0; i + 2 <= x; ++i)
    prefix += sizes[static_cast<size_t>(i)];
  // Walk positions right to left (excluding the last, which absorbs the rest):
  // raise the first one whose increment still leaves room for a nondecreasing
  // tail, then give that tail its minimal shape.
  for (Int i = x - 2; i >= 0; --i) {
    prefix -= sizes[static_cast<size_t>(i)];
    const Int v = sizes[static_cast<size_t>(i)] + 1;
    const Int tail = x - 1 - i;
    if (n - prefix - v >= v * tail) {
      sizes[static_cast<size_t>(i)] = v;
      for (Int j = i + 1; j + 1 < x; ++j) sizes[static_cast<size_t>(j)] = v;
      sizes[static_cast<size_t>(x - 1)] = n - prefix - v - v * (tail - 1);
      return true;
    }
  }
  return false;
}

std::vector<std::vector<Int>> size_multisets(Int n, Int x) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> sizes = first_size_multiset(n, x);
  do {
    out.push_back(sizes);
  } while (next_size_multiset(sizes, n));
  return out;
}

std::vector<FloorCheck> floor_bound_checks(const PartitionSpec& spec) {
  std::vector<FloorCheck> checks;
  const auto m = magic_constant(spec.n(), spec.block_count());
  if (!m) return checks;

  const auto& sizes = spec.sizes();
  Int run = 1;  // maximal p with n_1 = ... = n_p
  while (run < spec.block_count() && sizes[static_cast<size_t>(run)] == sizes[0])
    ++run;

  checks.reserve(static_cast<size_t>(run));
  for (Int q = 1; q <= run; ++q) {
    const Int q_sum = top_sum(spec.n(), checked_mul(q, sizes[0]));
    const Int bound = q_sum / q;
    checks.push_back({q, q_sum, bound, *m <= bound});
  }
  return checks;
}

FeasibilityReport check_feasibility(const PartitionSpec& spec) {
  FeasibilityReport report;
  report.n = spec.n();
  report.x = spec.block_count();
  report.sizes = spec.sizes();
  report.triangular_n = triangular(spec.n());
  report.magic = magic_constant(spec.n(), spec.block_count());
  report.divisible = report.magic.has_value();

  if (!report.divisible) {
    report.feasible = false;
    std::ostringstream os;
    os << "T_n not divisible by x (T_" << report.n << " = " << report.triangular_n
       << ", x = " << report.x << ")";
    report.reason = os.str();
    return report;
  }

  const Int m = *report.magic;
  report.prefix_checks.reserve(static_cast<size_t>(report.x));
  for (Int i = 1; i <= report.x; ++i) {
    const Int lhs = checked_mul(i, m);
    const Int rhs = top_sum(report.n, spec.prefix_sums()[static_cast<size_t>(i - 1)]);
    const bool ok = lhs <= rhs;
    report.prefix_checks.push_back({i, lhs, rhs, ok});
    if (!ok && !report.witness) report.witness = i;
  }
  report.floor_checks = floor_bound_checks(spec);

  report.feasible = !report.witness.has_value();
  if (!report.feasible) {
    const auto& bad = report.prefix_checks[static_cast<size_t>(*report.witness - 1)];
    const Int n_i = spec.prefix_sums()[static_cast<size_t>(bad.index - 1)];
    std::ostringstream os;
    os << "prefix bound violated at i = " << bad.index << ": " << bad.index
       << "*M = " << bad.lhs << " > " << bad.rhs << " = sum of the " << n_i
       << " largest elements";
    report.reason = os.str();
  }
  return report;
}

}  // namespace cspart
