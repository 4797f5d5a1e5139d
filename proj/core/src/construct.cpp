#include "cspart/construct.hpp"

#include <algorithm>
#include <numeric>

namespace cspart {
namespace {

constexpr Int kNoPos = -1;

// Internal signal for budget exhaustion inside the block search; converted to
// a status by construct(), never escapes this translation unit.
struct BudgetStop {};

// Availability index over a fixed descending value array. Fenwick trees give
// O(log m) rank/prefix-sum queries; a doubly linked list gives O(1) ordered
// iteration. remove/restore must nest LIFO, which backtracking guarantees.
class PoolIndex {
public:
  explicit PoolIndex(std::vector<Int> values_desc)
      : vals_(std::move(values_desc)),
        m_(static_cast<Int>(vals_.size())),
        cnt_(static_cast<size_t>(m_) + 1, 0),
        sum_(static_cast<size_t>(m_) + 1, 0),
        nxt_(static_cast<size_t>(m_) + 2, 0),
        prv_(static_cast<size_t>(m_) + 2, 0) {
    for (Int i = 0; i <= m_ + 1; ++i) {
      nxt_[static_cast<size_t>(i)] = i + 1;
      prv_[static_cast<size_t>(i)] = i - 1;
    }
    nxt_[static_cast<size_t>(m_ + 1)] = m_ + 1;
    prv_[0] = 0;
    for (Int p = 0; p < m_; ++p) fen_add(p, +1);
    avail_ = m_;
  }

  Int available() const { return avail_; }
  Int value_at(Int p) const { return vals_[static_cast<size_t>(p)]; }

  void remove(Int p) {
    fen_add(p, -1);
    const Int node = p + 1;
    nxt_[static_cast<size_t>(prv_[static_cast<size_t>(node)])] = nxt_[static_cast<size_t>(node)];
    prv_[static_cast<size_t>(nxt_[static_cast<size_t>(node)])] = prv_[static_cast<size_t>(node)];
    --avail_;
  }

  void restore(Int p) {
    fen_add(p, +1);
    const Int node = p + 1;
    nxt_[static_cast<size_t>(prv_[static_cast<size_t>(node)])] = node;
    prv_[static_cast<size_t>(nxt_[static_cast<size_t>(node)])] = node;
    ++avail_;
  }

  Int first_at_or_after(Int p) const {
    if (p >= m_) return kNoPos;
    const Int before = cnt_prefix(p - 1);
    if (before >= avail_) return kNoPos;
    return kth_available(before + 1);
  }

  Int next_after(Int p) const {
    const Int node = nxt_[static_cast<size_t>(p + 1)];
    return node == m_ + 1 ? kNoPos : node - 1;
  }

  Int count_from(Int p) const { return avail_ - cnt_prefix(p - 1); }

  // Sum of the k largest available values at positions >= p; needs
  // k <= count_from(p). The k largest occupy the first k available positions.
  Int top_k_from(Int p, Int k) const {
    if (k == 0) return 0;
    const Int before = cnt_prefix(p - 1);
    const Int last = kth_available(before + k);
    return sum_prefix(last) - sum_prefix(p - 1);
  }

  // Sum of the k smallest available values at positions >= p; needs
  // k <= count_from(p), which puts all k of them at positions >= p.
  Int bottom_k_from(Int p, Int k) const {
    if (k == 0) return 0;
    const Int first = kth_available(avail_ - k + 1);
    return sum_prefix(m_ - 1) - sum_prefix(first - 1);
  }

private:
  void fen_add(Int p, Int delta) {
    const Int v = vals_[static_cast<size_t>(p)] * delta;
    for (Int i = p + 1; i <= m_; i += i & -i) {
      cnt_[static_cast<size_t>(i)] += delta;
      sum_[static_cast<size_t>(i)] += v;
    }
  }

  Int cnt_prefix(Int p) const {  // available positions in [0, p]
    Int total = 0;
    for (Int i = p + 1; i > 0; i -= i & -i) total += cnt_[static_cast<size_t>(i)];
    return total;
  }

  Int sum_prefix(Int p) const {
    Int total = 0;
    for (Int i = p + 1; i > 0; i -= i & -i) total += sum_[static_cast<size_t>(i)];
    return total;
  }

  Int kth_available(Int k) const {  // k is 1-based; caller ensures k <= avail_
    Int pos = 0;
    Int mask = Int{1} << (63 - __builtin_clzll(static_cast<unsigned long long>(m_)));
    Int remaining = k;
    while (mask > 0) {
      const Int probe = pos + mask;
      if (probe <= m_ && cnt_[static_cast<size_t>(probe)] < remaining) {
        pos = probe;
        remaining -= cnt_[static_cast<size_t>(probe)];
      }
      mask >>= 1;
    }
    return pos;  // 1-based tree index pos+1 holds the k-th; 0-based position = pos
  }

  std::vector<Int> vals_;
  Int m_ = 0;
  Int avail_ = 0;
  std::vector<Int> cnt_, sum_;
  std::vector<Int> nxt_, prv_;
};

// Depth-first block filler. Blocks are processed smallest cardinality first;
// inside a block, candidates descend, so the first completed sequence is the
// descending-lex greatest over (block 1 selection, block 2 selection, ...).
// The suffix bounds prune only states no completion can extend, which keeps
// that order exact while skipping the dead subtrees a literal
// select-then-patch loop would crawl through.
class BlockSearch {
public:
  BlockSearch(const PartitionSpec& spec, Int magic, std::uint64_t budget)
      : sizes_(spec.sizes()),
        x_(spec.block_count()),
        magic_(magic),
        budget_(budget),
        pool_(descending(spec.n())) {
    blocks_.resize(static_cast<size_t>(x_));
    for (Int i = 0; i < x_; ++i)
      blocks_[static_cast<size_t>(i)].reserve(static_cast<size_t>(sizes_[static_cast<size_t>(i)]));
  }

  bool run() { return solve_block(0); }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::vector<Int>> take_blocks() { return std::move(blocks_); }

private:
  static std::vector<Int> descending(Int n) {
    std::vector<Int> vals(static_cast<size_t>(n));
    std::iota(vals.rbegin(), vals.rend(), Int{1});
    return vals;
  }

  // Necessary conditions on the blocks after bi: every prefix of their sizes
  // must fit under the current available top sums and over the bottom sums.
  // The current block's unpicked elements only shrink availability further,
  // so a failure here is final for the whole subtree.
  bool suffix_ok(Int bi) const {
    Int need = 0;
    for (Int j = 1; bi + j < x_; ++j) {
      need += sizes_[static_cast<size_t>(bi + j)];
      const Int target = j * magic_;
      if (target > pool_.top_k_from(0, need)) return false;
      if (target < pool_.bottom_k_from(0, need)) return false;
    }
    return true;
  }

  bool solve_block(Int bi) {
    if (bi == x_ - 1) {
      auto& rest = blocks_.back();
      rest.clear();
      Int total = 0;
      for (Int p = pool_.first_at_or_after(0); p != kNoPos; p = pool_.next_after(p)) {
        rest.push_back(pool_.value_at(p));
        total += pool_.value_at(p);
      }
      // holds by arithmetic once the earlier blocks each sum to magic
      return static_cast<Int>(rest.size()) == sizes_.back() && total == magic_;
    }
    return extend(bi, 0, sizes_[static_cast<size_t>(bi)], magic_);
  }

  bool extend(Int bi, Int start, Int r, Int t) {
    if (++nodes_ > budget_) throw BudgetStop{};
    if (r == 0) return t == 0 && solve_block(bi + 1);
    if (pool_.count_from(start) < r) return false;
    if (t > pool_.top_k_from(start, r) || t < pool_.bottom_k_from(start, r)) return false;
    auto& chosen = blocks_[static_cast<size_t>(bi)];
    for (Int p = pool_.first_at_or_after(start); p != kNoPos; p = pool_.next_after(p)) {
      const Int v = pool_.value_at(p);
      pool_.remove(p);
      chosen.push_back(v);
      if (suffix_ok(bi) && extend(bi, p + 1, r - 1, t - v)) return true;
      chosen.pop_back();
      pool_.restore(p);
    }
    return false;
  }

  std::vector<Int> sizes_;
  Int x_ = 0;
  Int magic_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  PoolIndex pool_;
  std::vector<std::vector<Int>> blocks_;
};

struct SubsetDfs {
  const std::vector<Int>& vals;  // descending, distinct
  const std::vector<Int>& prefix;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<Int> chosen;

  bool dfs(Int start, Int r, Int t) {
    if (++nodes > budget) throw budget_exceeded("select_block: node budget exhausted");
    if (r == 0) return t == 0;
    const Int m = static_cast<Int>(vals.size());
    if (m - start < r) return false;
    const Int top = prefix[static_cast<size_t>(start + r)] - prefix[static_cast<size_t>(start)];
    const Int bottom = prefix[static_cast<size_t>(m)] - prefix[static_cast<size_t>(m - r)];
    if (t > top || t < bottom) return false;
    for (Int p = start; p + r <= m; ++p) {
      chosen.push_back(vals[static_cast<size_t>(p)]);
      if (dfs(p + 1, r - 1, t - vals[static_cast<size_t>(p)])) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Int>> select_block(const std::vector<Int>& pool, Int k, Int target,
                                             std::uint64_t node_budget) {
  if (k < 1) throw std::invalid_argument("select_block: k must be >= 1");
  if (static_cast<size_t>(k) > pool.size())
    throw std::invalid_argument("select_block: k exceeds pool size");
  if (target < 1) throw std::invalid_argument("select_block: target must be >= 1");

  std::vector<Int> vals(pool);
  std::sort(vals.begin(), vals.end(), std::greater<Int>());
  if (!vals.empty() && vals.back() < 1)
    throw std::invalid_argument("select_block: pool elements must be positive");
  if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
    throw std::invalid_argument("select_block: pool elements must be distinct");

  std::vector<Int> prefix(vals.size() + 1, 0);
  for (size_t i = 0; i < vals.size(); ++i)
    prefix[i + 1] = checked_add(prefix[i], vals[i]);

  SubsetDfs dfs{vals, prefix, node_budget};
  if (dfs.dfs(0, k, target)) return dfs.chosen;
  return std::nullopt;
}

ConstructResult construct(const PartitionSpec& spec, std::uint64_t node_budget) {
  ConstructResult result;
  result.feasibility = check_feasibility(spec);
  if (!result.feasibility.feasible) {
    result.status = ConstructStatus::infeasible;
    return result;
  }

  const Int magic = *result.feasibility.magic;
  BlockSearch search(spec, magic, node_budget);
  bool found = false;
  try {
    found = search.run();
  } catch (const BudgetStop&) {
    result.status = ConstructStatus::budget_exceeded;
    result.nodes = search.nodes();
    return result;
  }
  result.nodes = search.nodes();
  if (!found) {
    // Feasible predicate but exhausted search: the constructive claim failed.
    // Callers must surface result.feasibility as a diagnostic.
    result.status = ConstructStatus::construction_failure;
    return result;
  }

  ConstantSumPartition part;
  part.n = spec.n();
  part.magic_constant = magic;
  part.blocks = search.take_blocks();

  // fallback flag: replay the never-revisit greedy chain against the solution.
  // Pools evolve by the solution's blocks, so the first difference marks the
  // exact point where a literal chain would have had to backtrack.
  try {
    std::vector<Int> pool(static_cast<size_t>(spec.n()));
    std::iota(pool.rbegin(), pool.rend(), Int{1});
    for (Int i = 0; i + 1 < spec.block_count(); ++i) {
      const auto& committed = part.blocks[static_cast<size_t>(i)];
      auto greedy = select_block(pool, spec.sizes()[static_cast<size_t>(i)], magic, node_budget);
      if (!greedy || *greedy != committed) {
        result.fallback_used = true;
        break;
      }
      std::vector<Int> next;
      next.reserve(pool.size() - committed.size());
      size_t ci = 0;
      for (Int v : pool) {
        if (ci < committed.size() && committed[ci] == v) {
          ++ci;
          continue;
        }
        next.push_back(v);
      }
      pool = std::move(next);
    }
  } catch (const budget_exceeded&) {
    result.fallback_used = true;  // greedy chain not reproducible within budget
  }

  result.partition = canonicalized(std::move(part));
  result.status = ConstructStatus::solved;
  return result;
}

ConstructResult construct_free(Int n, Int x, std::uint64_t node_budget) {
  const auto magic = magic_constant(n, x);  // validates n > x >= 2
  PartitionSpec balanced(n, balanced_sizes(n, x));
  ConstructResult result = construct(balanced, node_budget);
  if (!magic || result.status == ConstructStatus::solved ||
      result.status == ConstructStatus::budget_exceeded)
    return result;

  // Balanced prefix sums dominate every other multiset's, so nothing below
  // can succeed where balanced failed; the scan earns the verdict instead of
  // assuming it, and the budget keeps it finite on adversarial inputs.
  std::uint64_t scanned = 0;
  std::vector<Int> sizes = first_size_multiset(n, x);
  do {
    if (++scanned > node_budget) {
      result.status = ConstructStatus::budget_exceeded;
      return result;
    }
    if (sizes == balanced.sizes()) continue;
    PartitionSpec spec(n, sizes);
    if (!check_feasibility(spec).feasible) continue;
    ConstructResult attempt = construct(spec, node_budget);
    if (attempt.status == ConstructStatus::solved ||
        attempt.status == ConstructStatus::budget_exceeded)
      return attempt;
    // A passed predicate with an exhausted search is a genuine find, not a
    // reason to stop scanning; keep the first such report in case nothing
    // later solves.
    if (attempt.status == ConstructStatus::construction_failure &&
        result.status != ConstructStatus::construction_failure)
      result = std::move(attempt);
  } while (next_size_multiset(sizes, n));
  return result;  // the strongest verdict the scan produced
}

VerificationReport verify(const ConstantSumPartition& candidate, const PartitionSpec* spec) {
  VerificationReport report;
  auto& failures = report.failures;
  const ConstantSumPartition canon = canonicalized(candidate);

  if (canon.n < 1) {
    failures.push_back({FindingKind::not_a_partition, -1, 0, 0, 0,
                        "candidate n must be at least 1"});
    report.valid = false;
    return report;
  }
  if (spec && spec->n() != canon.n)
    failures.push_back({FindingKind::size_mismatch, -1, 0, spec->n(), canon.n,
                        "expected ground set size differs from candidate n"});

  // (a) the blocks must cover 1..n exactly once
  std::vector<Int> elems;
  for (const auto& block : canon.blocks)
    elems.insert(elems.end(), block.begin(), block.end());
  std::sort(elems.begin(), elems.end());

  constexpr Int kDetailCap = 32;
  Int detailed = 0;
  Int suppressed = 0;
  auto element_finding = [&](Int value, Int occurrences, const char* what) {
    if (detailed < kDetailCap) {
      ++detailed;
      failures.push_back({FindingKind::not_a_partition, -1, value, 1, occurrences, what});
    } else {
      ++suppressed;
    }
  };
  auto missing_range = [&](Int lo, Int hi) {
    for (Int miss = lo; miss <= hi; ++miss) {
      if (detailed >= kDetailCap) {  // stay O(1) on astronomically sparse input
        suppressed += hi - miss + 1;
        return;
      }
      element_finding(miss, 0, "element missing from every block");
    }
  };

  Int last_in_range = 0;
  size_t i = 0;
  while (i < elems.size()) {
    size_t j = i;
    while (j < elems.size() && elems[j] == elems[i]) ++j;
    const Int value = elems[i];
    const Int occurrences = static_cast<Int>(j - i);
    if (value < 1 || value > canon.n) {
      element_finding(value, occurrences, "element outside 1..n");
    } else {
      missing_range(last_in_range + 1, value - 1);
      if (occurrences > 1)
        element_finding(value, occurrences, "element appears more than once");
      last_in_range = value;
    }
    i = j;
  }
  missing_range(last_in_range + 1, canon.n);
  if (suppressed > 0)
    failures.push_back({FindingKind::not_a_partition, -1, 0, 0, suppressed,
                        "further element problems suppressed after the first 32"});

  // (b) block cardinalities against the expected multiset, when one is given;
  // canonical order sorts blocks by size ascending, matching spec.sizes().
  if (spec) {
    const Int expected_count = spec->block_count();
    const Int actual_count = static_cast<Int>(canon.blocks.size());
    if (expected_count != actual_count) {
      failures.push_back({FindingKind::size_mismatch, -1, 0, expected_count, actual_count,
                          "number of blocks differs from expected"});
    } else {
      for (Int b = 0; b < actual_count; ++b) {
        const Int want = spec->sizes()[static_cast<size_t>(b)];
        const Int got = static_cast<Int>(canon.blocks[static_cast<size_t>(b)].size());
        if (want != got)
          failures.push_back({FindingKind::size_mismatch, b + 1, 0, want, got,
                              "block cardinality differs from expected"});
      }
    }
  }

  // (c) every block must hit the claimed constant, and x * constant must
  // equal 1 + 2 + ... + n or the constant itself is a lie
  try {
    for (size_t b = 0; b < canon.blocks.size(); ++b) {
      Int sum = 0;
      for (Int v : canon.blocks[b]) sum = checked_add(sum, v);
      if (sum != canon.magic_constant)
        failures.push_back({FindingKind::sum_mismatch, static_cast<Int>(b) + 1, 0,
                            canon.magic_constant, sum, "block sum differs from the constant"});
    }
    const Int total = triangular(canon.n);
    const Int claimed = checked_mul(static_cast<Int>(canon.blocks.size()), canon.magic_constant);
    if (claimed != total)
      failures.push_back({FindingKind::sum_mismatch, -1, 0, total, claimed,
                          "blocks * constant differs from the total 1 + ... + n"});
  } catch (const std::overflow_error&) {
    failures.push_back({FindingKind::sum_mismatch, -1, 0, 0, 0,
                        "sum check overflowed 64-bit arithmetic"});
  }

  report.valid = failures.empty();
  return report;
}

}  // namespace cspart
