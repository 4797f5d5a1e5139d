#include "cspart/oracle.hpp"

#include <algorithm>

namespace cspart {
namespace {

// Descending element placement with canonical labeling of equal-size blocks.
// Deliberately shares no search machinery with construct(): this is the
// ground truth the solver is checked against.
class Enumerator {
public:
  Enumerator(const PartitionSpec& spec, Int magic, std::optional<Int> limit,
             std::uint64_t budget)
      : n_(spec.n()),
        x_(spec.block_count()),
        magic_(magic),
        limit_(limit),
        budget_(budget) {
    blocks_.resize(static_cast<size_t>(x_));
    rem_cap_ = spec.sizes();
    rem_sum_.assign(static_cast<size_t>(x_), magic_);
    for (Int i = 0; i < x_; ++i)
      blocks_[static_cast<size_t>(i)].reserve(static_cast<size_t>(rem_cap_[static_cast<size_t>(i)]));
  }

  OracleResult run() {
    place(n_);
    std::sort(found_.begin(), found_.end(), partition_less);
    OracleResult result;
    result.partitions = std::move(found_);
    result.count = static_cast<Int>(result.partitions.size());
    result.more = more_;
    result.capped = capped_;
    result.nodes = nodes_;
    return result;
  }

private:
  // returns true when the search should stop (limit satisfied or budget gone)
  bool place(Int e) {
    if (++nodes_ > budget_) {
      capped_ = true;
      return true;
    }
    if (e == 0) {
      // rem sums are nonnegative and total zero, likewise rem caps, so every
      // block is exactly full at exactly the constant
      record();
      return more_;
    }
    for (Int i = 0; i < x_; ++i) {
      const size_t bi = static_cast<size_t>(i);
      if (rem_cap_[bi] == 0) continue;
      // Equal-size blocks are interchangeable while empty, and within a size
      // group the touched ones always form a prefix, so skipping an empty
      // block right after an equal empty one visits each partition once.
      if (blocks_[bi].empty() && i > 0 && blocks_[bi - 1].empty() &&
          rem_cap_[bi] == rem_cap_[bi - 1])
        continue;
      if (e > rem_sum_[bi]) continue;
      const Int r = rem_cap_[bi] - 1;
      const Int rest = rem_sum_[bi] - e;
      if (r == 0) {
        if (rest != 0) continue;
      } else {
        if (r > e - 1) continue;  // not enough smaller elements left for this block
        if (rest < triangular(r) || rest > top_sum(e - 1, r)) continue;
      }
      blocks_[bi].push_back(e);
      rem_cap_[bi] -= 1;
      rem_sum_[bi] = rest;
      const bool stop = place(e - 1);
      rem_sum_[bi] += e;
      rem_cap_[bi] += 1;
      blocks_[bi].pop_back();
      if (stop) return true;
    }
    return false;
  }

  void record() {
    ConstantSumPartition p;
    p.n = n_;
    p.magic_constant = magic_;
    p.blocks = blocks_;
    found_.push_back(canonicalized(std::move(p)));
    if (limit_ && static_cast<Int>(found_.size()) > *limit_) {
      found_.pop_back();  // the witness only proves there are more
      more_ = true;
    }
  }

  Int n_, x_, magic_;
  std::optional<Int> limit_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool more_ = false;
  bool capped_ = false;
  std::vector<std::vector<Int>> blocks_;
  std::vector<Int> rem_cap_;
  std::vector<Int> rem_sum_;
  std::vector<ConstantSumPartition> found_;
};

}  // namespace

OracleResult oracle_enumerate(const PartitionSpec& spec, std::optional<Int> limit,
                              std::uint64_t node_budget) {
  if (limit && *limit < 0) throw std::invalid_argument("oracle limit must be >= 0");
  const auto magic = magic_constant(spec.n(), spec.block_count());
  if (!magic) return {};  // no common sum can exist, nothing to enumerate
  Enumerator en(spec, *magic, limit, node_budget);
  return en.run();
}

std::vector<SweepRecord> sweep_equivalence(Int n_max, SearchLimits limits) {
  if (n_max < 3 || n_max > 16)
    throw std::invalid_argument("sweep ground set must satisfy 3 <= n_max <= 16");

  std::vector<SweepRecord> records;
  for (Int n = 3; n <= n_max; ++n) {
    for (Int x = 2; x < n; ++x) {
      for (const auto& sizes : size_multisets(n, x)) {
        PartitionSpec spec(n, sizes);
        SweepRecord rec;
        rec.n = n;
        rec.x = x;
        rec.sizes = sizes;

        const FeasibilityReport fr = check_feasibility(spec);
        rec.predicate_feasible = fr.feasible;
        rec.magic = fr.magic;

        const OracleResult oracle = oracle_enumerate(spec, std::nullopt, limits.oracle_nodes);
        rec.oracle_count = oracle.count;
        rec.oracle_capped = oracle.capped;

        const ConstructResult built = construct(spec, limits.construct_nodes);
        rec.construct_succeeded = built.status == ConstructStatus::solved;
        rec.construct_budget_exceeded = built.status == ConstructStatus::budget_exceeded;
        rec.fallback_used = built.fallback_used;

        bool agree = true;
        if (!rec.oracle_capped && rec.predicate_feasible != (rec.oracle_count > 0)) agree = false;
        if (!rec.construct_budget_exceeded &&
            rec.predicate_feasible != rec.construct_succeeded)
          agree = false;
        // a solved constructor must also be confirmed by the oracle
        if (rec.construct_succeeded && !rec.oracle_capped && rec.oracle_count == 0) agree = false;
        rec.agree = agree;
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

}  // namespace cspart
