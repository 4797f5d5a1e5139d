#include <doctest.h>

#include <numeric>

#include "brute.hpp"
#include "cspart/construct.hpp"
#include "cspart/oracle.hpp"

using namespace cspart;

namespace {

std::vector<Int> descending(Int n) {
  std::vector<Int> v(static_cast<size_t>(n));
  std::iota(v.rbegin(), v.rend(), Int{1});
  return v;
}

ConstantSumPartition golden_10() {
  ConstantSumPartition p;
  p.n = 10;
  p.magic_constant = 11;
  p.blocks = {{10, 1}, {9, 2}, {8, 3}, {7, 4}, {6, 5}};
  return p;
}

}  // namespace

TEST_CASE("select_block picks the descending-lex greatest subset") {
  CHECK(select_block(descending(10), 2, 11) == std::vector<Int>{10, 1});
  CHECK(select_block(descending(10), 3, 24) == std::vector<Int>{10, 9, 5});
  // target forces almost the whole prefix, then a deep drop
  CHECK(select_block(descending(105), 12, 1113) ==
        std::vector<Int>{105, 104, 103, 102, 101, 100, 99, 98, 97, 96, 95, 13});
  CHECK(select_block(descending(10), 2, 20) == std::nullopt);
  CHECK(select_block({4, 7, 2, 9}, 2, 11) == std::vector<Int>{9, 2});  // any input order
}

TEST_CASE("select_block agrees with the exhaustive scan") {
  const std::vector<Int> primes = {2, 3, 5, 7, 11, 13, 17, 19};
  for (Int k = 2; k <= 4; ++k) {
    const Int lo = 2 + 3;  // anything below the minimum is infeasible anyway
    const Int hi = 19 + 17 + 13 + 11;
    for (Int target = lo; target <= hi; ++target) {
      const brute::SubsetScan scan = brute::scan_subsets(primes, k, target);
      const auto got = select_block(primes, k, target);
      CHECK(got.has_value() == (scan.solutions > 0));
      if (got && scan.greatest) CHECK(*got == *scan.greatest);
    }
  }
  for (Int target = 1; target <= 30; ++target) {
    const brute::SubsetScan scan = brute::scan_subsets(descending(8), 3, target);
    const auto got = select_block(descending(8), 3, target);
    CHECK(got.has_value() == (scan.solutions > 0));
    if (got && scan.greatest) CHECK(*got == *scan.greatest);
  }
}

TEST_CASE("select_block validates its arguments") {
  CHECK_THROWS_AS(select_block(descending(5), 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(select_block(descending(5), 6, 5), std::invalid_argument);
  CHECK_THROWS_AS(select_block(descending(5), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(select_block({3, 3, 1}, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(select_block({0, 1, 2}, 2, 3), std::invalid_argument);
}

TEST_CASE("select_block stops at its node budget") {
  CHECK_THROWS_AS(select_block(descending(30), 15, 232, 5), budget_exceeded);
}

TEST_CASE("constructing five pairs of {1..10} yields the golden partition") {
  const ConstructResult r = construct(PartitionSpec(10, {2, 2, 2, 2, 2}));
  REQUIRE(r.status == ConstructStatus::solved);
  CHECK(*r.partition == golden_10());
  CHECK_FALSE(r.fallback_used);
  CHECK(r.nodes > 0);
  CHECK(verify(*r.partition).valid);
}

TEST_CASE("n=105 with sizes 12+12+15+20+46 solves well inside the budget") {
  const PartitionSpec spec(105, {12, 12, 15, 20, 46});
  const ConstructResult r = construct(spec);
  REQUIRE(r.status == ConstructStatus::solved);
  CHECK(verify(*r.partition, &spec).valid);
  // the greedy first block (...,95,13) starves the second block, so the
  // committed first block must differ from the pure chain's choice
  CHECK(r.fallback_used);
  CHECK(r.nodes < 100000);
  const auto& first = r.partition->blocks.front();
  CHECK(std::accumulate(first.begin(), first.end(), Int{0}) == 1113);
}

TEST_CASE("infeasible specs come back with the feasibility witness") {
  const ConstructResult r = construct(PartitionSpec(20, {4, 4, 12}));
  CHECK(r.status == ConstructStatus::infeasible);
  CHECK(!r.partition.has_value());
  CHECK(r.feasibility.witness == 2);
}

TEST_CASE("a starved budget is reported as such, never as infeasible") {
  const ConstructResult r = construct(PartitionSpec(105, {12, 12, 15, 20, 46}), 50);
  CHECK(r.status == ConstructStatus::budget_exceeded);
  CHECK(!r.partition.has_value());
  CHECK(r.feasibility.feasible);  // the predicate still says yes
  CHECK(r.nodes >= 50);
}

TEST_CASE("fallback flag matches an independent replay of the greedy chain") {
  for (Int n = 3; n <= 10; ++n)
    for (Int x = 2; x < n; ++x)
      for (const auto& sizes : size_multisets(n, x)) {
        const PartitionSpec spec(n, sizes);
        const ConstructResult r = construct(spec);
        if (r.status != ConstructStatus::solved) continue;
        const Int magic = *r.feasibility.magic;

        // never-revisit chain: each block takes its lex-greatest selection
        std::vector<Int> pool = descending(n);
        std::vector<std::vector<Int>> chain;
        bool chain_ok = true;
        for (Int i = 0; chain_ok && i + 1 < x; ++i) {
          const auto pick = select_block(pool, spec.sizes()[static_cast<size_t>(i)], magic);
          if (!pick) {
            chain_ok = false;
            break;
          }
          chain.push_back(*pick);
          std::vector<Int> rest;
          size_t ci = 0;
          for (Int v : pool) {
            if (ci < pick->size() && (*pick)[ci] == v)
              ++ci;
            else
              rest.push_back(v);
          }
          pool = std::move(rest);
        }
        if (chain_ok) {
          chain_ok = std::accumulate(pool.begin(), pool.end(), Int{0}) == magic &&
                     static_cast<Int>(pool.size()) == spec.sizes().back();
        }
        if (chain_ok) {
          chain.push_back(pool);
          ConstantSumPartition direct;
          direct.n = n;
          direct.magic_constant = magic;
          direct.blocks = std::move(chain);
          CHECK_FALSE(r.fallback_used);
          CHECK(*r.partition == canonicalized(std::move(direct)));
        } else {
          CHECK(r.fallback_used);
        }
      }
}

TEST_CASE("free-size construction prefers the balanced split") {
  const ConstructResult r = construct_free(10, 5);
  REQUIRE(r.status == ConstructStatus::solved);
  CHECK(*r.partition == golden_10());

  const ConstructResult d = construct_free(10, 4);  // 55 is not divisible by 4
  CHECK(d.status == ConstructStatus::infeasible);
  CHECK_FALSE(d.feasibility.divisible);

  const ConstructResult big = construct_free(12, 3);
  REQUIRE(big.status == ConstructStatus::solved);
  CHECK(verify(*big.partition).valid);
  CHECK(big.partition->magic_constant == 26);

  CHECK_THROWS_AS(construct_free(5, 5), invalid_spec);
  CHECK_THROWS_AS(construct_free(3, 1), invalid_spec);
}

TEST_CASE("free-size construction solves every divisible total except the rigid pair") {
  // (8,6) is the lone divisible case below 13 with no workable size multiset:
  // 8 splits into 6 parts only as 1+1+1+1+1+3 or 1+1+1+1+2+2, and several
  // singleton blocks would each have to equal the constant 6.
  for (Int n = 3; n <= 12; ++n)
    for (Int x = 2; x < n; ++x) {
      const ConstructResult r = construct_free(n, x);
      const bool divisible = triangular(n) % x == 0;
      if (n == 8 && x == 6) {
        CHECK(r.status == ConstructStatus::construction_failure);
        CHECK(r.feasibility.feasible);  // the bounds are satisfied regardless
        continue;
      }
      CHECK((r.status == ConstructStatus::solved) == divisible);
      if (r.status == ConstructStatus::solved) CHECK(verify(*r.partition).valid);
    }
}

TEST_CASE("an exhausted search on a bound-satisfying spec is reported, not hidden") {
  // Several size-1 blocks force equal elements, so no partition exists, yet
  // every divisibility, prefix and floor bound passes. The search must sweep
  // the whole space, fail, and say so with the passing report attached.
  for (const auto& sizes :
       {std::vector<Int>{1, 1, 1, 1, 1, 3}, std::vector<Int>{1, 1, 1, 1, 2, 2}}) {
    const PartitionSpec spec(8, sizes);
    const FeasibilityReport fr = check_feasibility(spec);
    CHECK(fr.feasible);
    CHECK(fr.magic == 6);
    for (const auto& pc : fr.prefix_checks) CHECK(pc.ok);
    for (const auto& fc : fr.floor_checks) CHECK(fc.ok);

    const ConstructResult r = construct(spec);
    CHECK(r.status == ConstructStatus::construction_failure);
    CHECK(!r.partition.has_value());
    CHECK(r.feasibility.feasible);
    CHECK_FALSE(r.fallback_used);
    CHECK(oracle_enumerate(spec).count == 0);  // ground truth: nothing to find
  }
}

TEST_CASE("verify accepts the golden partition and pins its spec") {
  CHECK(verify(golden_10()).valid);
  const PartitionSpec spec(10, {2, 2, 2, 2, 2});
  CHECK(verify(golden_10(), &spec).valid);
}

TEST_CASE("verify rejects the flawed 105-element candidate with exact findings") {
  const ConstantSumPartition flawed = brute::flawed_candidate_105();
  const PartitionSpec spec(105, {12, 12, 15, 20, 46});
  const VerificationReport report = verify(flawed, &spec);
  CHECK_FALSE(report.valid);
  REQUIRE(report.failures.size() == 3);

  CHECK(report.failures[0].kind == FindingKind::not_a_partition);
  CHECK(report.failures[0].value == 87);
  CHECK(report.failures[0].actual == 0);  // missing entirely

  CHECK(report.failures[1].kind == FindingKind::not_a_partition);
  CHECK(report.failures[1].value == 88);
  CHECK(report.failures[1].actual == 2);  // present in two blocks

  CHECK(report.failures[2].kind == FindingKind::sum_mismatch);
  CHECK(report.failures[2].block_index == 5);  // the 46-element block, canonically last
  CHECK(report.failures[2].expected == 1113);
  CHECK(report.failures[2].actual == 1114);
}

TEST_CASE("verify reports size mismatches against an explicit spec") {
  const PartitionSpec wrong(10, {1, 2, 2, 2, 3});
  const VerificationReport r = verify(golden_10(), &wrong);
  CHECK_FALSE(r.valid);
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].kind == FindingKind::size_mismatch);
  CHECK(r.failures[0].block_index == 1);
  CHECK(r.failures[0].expected == 1);
  CHECK(r.failures[0].actual == 2);
  CHECK(r.failures[1].block_index == 5);
  CHECK(r.failures[1].expected == 3);

  const PartitionSpec fewer(10, {5, 5});
  const VerificationReport c = verify(golden_10(), &fewer);
  CHECK_FALSE(c.valid);
  REQUIRE(c.failures.size() == 1);
  CHECK(c.failures[0].kind == FindingKind::size_mismatch);
  CHECK(c.failures[0].block_index == -1);
  CHECK(c.failures[0].expected == 2);
  CHECK(c.failures[0].actual == 5);
}

TEST_CASE("verify flags a ground-set mismatch against the spec") {
  const PartitionSpec other(12, {6, 6});
  const VerificationReport r = verify(golden_10(), &other);
  CHECK_FALSE(r.valid);
  REQUIRE(r.failures.size() == 2);
  CHECK(r.failures[0].kind == FindingKind::size_mismatch);
  CHECK(r.failures[0].block_index == -1);
  CHECK(r.failures[0].expected == 12);
  CHECK(r.failures[0].actual == 10);
}

TEST_CASE("verify caps element findings on astronomically sparse candidates") {
  ConstantSumPartition sparse;
  sparse.n = 1000000;
  sparse.magic_constant = 3;
  sparse.blocks = {{1000000}, {2, 1}};
  const VerificationReport r = verify(sparse);
  CHECK_FALSE(r.valid);
  // 32 detailed missing elements, one suppression summary, one bad block sum,
  // and the global blocks-times-constant check
  REQUIRE(r.failures.size() == 35);
  Int suppressed = 0;
  for (const auto& f : r.failures)
    if (f.message.find("suppressed") != std::string::npos) suppressed = f.actual;
  CHECK(suppressed == 999997 - 32);
}

TEST_CASE("verify spots wrong sums and a dishonest constant") {
  ConstantSumPartition p = golden_10();
  p.blocks[4] = {6, 4};  // 5 swapped out for 4: duplicate 4, missing 5, bad sum
  const VerificationReport r = verify(p);
  CHECK_FALSE(r.valid);
  bool saw_dup = false, saw_missing = false, saw_sum = false;
  for (const auto& f : r.failures) {
    saw_dup = saw_dup || (f.kind == FindingKind::not_a_partition && f.value == 4 && f.actual == 2);
    saw_missing = saw_missing ||
                  (f.kind == FindingKind::not_a_partition && f.value == 5 && f.actual == 0);
    saw_sum = saw_sum || (f.kind == FindingKind::sum_mismatch && f.actual == 10);
  }
  CHECK(saw_dup);
  CHECK(saw_missing);
  CHECK(saw_sum);

  ConstantSumPartition lying = golden_10();
  lying.magic_constant = 12;  // blocks sum 11; 5 * 12 != 55 either
  const VerificationReport lie = verify(lying);
  CHECK_FALSE(lie.valid);
  REQUIRE(lie.failures.size() == 6);  // five block sums plus the global check
  for (const auto& f : lie.failures) CHECK(f.kind == FindingKind::sum_mismatch);
}
