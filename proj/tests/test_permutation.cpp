#include <doctest.h>

#include "brute.hpp"
#include "cspart/oracle.hpp"
#include "cspart/permutation.hpp"

using namespace cspart;

namespace {

ConstantSumPartition golden_10() {
  ConstantSumPartition p;
  p.n = 10;
  p.magic_constant = 11;
  p.blocks = {{10, 1}, {9, 2}, {8, 3}, {7, 4}, {6, 5}};
  return p;
}

// transposition of a and b on {1..n}
Permutation swap_two(Int n, Int a, Int b) {
  std::vector<Int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), Int{1});
  std::swap(image[static_cast<size_t>(a - 1)], image[static_cast<size_t>(b - 1)]);
  return Permutation(std::move(image));
}

}  // namespace

TEST_CASE("permutations must be bijections on {1..n}") {
  CHECK(Permutation({2, 1, 3}).degree() == 3);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("identity, apply and inverse behave like group operations") {
  const Permutation id = Permutation::identity(5);
  CHECK(id.apply(3) == 3);
  CHECK_THROWS_AS(id.apply(0), std::out_of_range);
  CHECK_THROWS_AS(id.apply(6), std::out_of_range);

  const Permutation s({3, 1, 2});
  CHECK(s.inverse() == Permutation({2, 3, 1}));
  for (Int i = 1; i <= 3; ++i) CHECK(s.inverse().apply(s.apply(i)) == i);
}

TEST_CASE("applying a permutation maps blocks in place") {
  const PartitionImage image = apply_to_partition(Permutation::identity(10), golden_10());
  CHECK(image.n == 10);
  CHECK(image.blocks == golden_10().blocks);
  CHECK(image.block_sums == std::vector<Int>{11, 11, 11, 11, 11});

  CHECK_THROWS_AS(apply_to_partition(Permutation::identity(5), golden_10()),
                  dimension_mismatch);
}

TEST_CASE("identity and within-block swaps preserve the partition strictly") {
  CHECK(is_magic_partition_permutation(Permutation::identity(10), golden_10()));
  CHECK(is_magic_partition_permutation(Permutation::identity(10), golden_10(),
                                       MagicMode::strict));
  // 10 and 1 share a block
  CHECK(is_magic_partition_permutation(swap_two(10, 1, 10), golden_10(), MagicMode::strict));
}

TEST_CASE("a cross-block transposition breaks the sums") {
  CHECK_FALSE(is_magic_partition_permutation(swap_two(10, 1, 2), golden_10()));
}

TEST_CASE("block-swapping permutations are loose-magic, strict only if same family") {
  // the five pairs of {1..10} form the unique family, so every loose
  // permutation there is strict as well
  const Permutation shuffled({2, 9, 3, 8, 4, 7, 5, 6, 1, 10});
  // sends {10,1}->{10,2}? compute: just assert consistency between modes
  const bool loose = is_magic_partition_permutation(shuffled, golden_10());
  const bool strict = is_magic_partition_permutation(shuffled, golden_10(), MagicMode::strict);
  CHECK(loose == strict);

  // with two half-sized blocks of {1..12} there are many families; a mapping
  // from one family onto a different one is loose but not strict
  const OracleResult families = oracle_enumerate(PartitionSpec(12, {6, 6}), 2);
  REQUIRE(families.count == 2);
  REQUIRE(families.more);
  const ConstantSumPartition& a = families.partitions[0];
  const ConstantSumPartition& b = families.partitions[1];
  std::vector<Int> image(12);
  for (size_t blk = 0; blk < 2; ++blk)
    for (size_t i = 0; i < 6; ++i)
      image[static_cast<size_t>(a.blocks[blk][i] - 1)] = b.blocks[blk][i];
  const Permutation to_other{std::move(image)};
  CHECK(is_magic_partition_permutation(to_other, a));
  CHECK_FALSE(is_magic_partition_permutation(to_other, a, MagicMode::strict));
}

TEST_CASE("the closed-form count matches brute force on the goldens") {
  CHECK(count_magic_partition_permutations(golden_10(), CountMethod::formula) == 3840);
  CHECK(count_magic_partition_permutations(golden_10(), CountMethod::brute) == 3840);

  ConstantSumPartition tiny;
  tiny.n = 3;
  tiny.magic_constant = 3;
  tiny.blocks = {{3}, {2, 1}};
  CHECK(count_magic_partition_permutations(tiny, CountMethod::formula) == 2);
  CHECK(count_magic_partition_permutations(tiny, CountMethod::brute) == 2);

  ConstantSumPartition quads;
  quads.n = 4;
  quads.magic_constant = 5;
  quads.blocks = {{4, 1}, {3, 2}};
  CHECK(count_magic_partition_permutations(quads, CountMethod::formula) == 8);
  CHECK(count_magic_partition_permutations(quads, CountMethod::brute) == 8);
}

TEST_CASE("the closed-form count matches brute force on every small instance") {
  for (Int n = 3; n <= 8; ++n)
    for (Int x = 2; x < n; ++x)
      for (const auto& sizes : size_multisets(n, x)) {
        const ConstructResult built = construct(PartitionSpec(n, sizes));
        if (built.status != ConstructStatus::solved) continue;
        const Int formula =
            count_magic_partition_permutations(*built.partition, CountMethod::formula);
        const Int brute_count =
            count_magic_partition_permutations(*built.partition, CountMethod::brute);
        CHECK(formula == brute_count);
        CHECK(formula > 0);  // identity is always magic
      }
}

TEST_CASE("brute counting refuses ground sets past 10") {
  const ConstructResult big = construct(PartitionSpec(12, {6, 6}));
  REQUIRE(big.status == ConstructStatus::solved);
  CHECK_THROWS_AS(count_magic_partition_permutations(*big.partition, CountMethod::brute),
                  budget_exceeded);
  CHECK(count_magic_partition_permutations(*big.partition, CountMethod::formula) > 0);
}

TEST_CASE("counting demands a valid partition") {
  CHECK_THROWS_AS(
      count_magic_partition_permutations(brute::flawed_candidate_105(), CountMethod::formula),
      std::invalid_argument);
}
