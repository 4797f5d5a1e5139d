#pragma once

#include <cstdint>
#include <vector>

#include "cspart/construct.hpp"
#include "cspart/types.hpp"

namespace cspart {

// A permutation of {1..n}, stored as its image: apply(i) == image[i-1].
class Permutation {
public:
  // Throws std::invalid_argument unless image is a bijection on {1..n}.
  explicit Permutation(std::vector<Int> image);

  static Permutation identity(Int n);

  Int degree() const { return static_cast<Int>(image_.size()); }
  Int apply(Int i) const;  // throws std::out_of_range unless 1 <= i <= degree
  Permutation inverse() const;
  const std::vector<Int>& image() const { return image_; }

  bool operator==(const Permutation&) const = default;

private:
  std::vector<Int> image_;
};

// The image family sigma(S_1), ..., sigma(S_x) in the original block order,
// with each image block's sum. Not canonicalized: position i shows what
// became of block i.
struct PartitionImage {
  Int n = 0;
  std::vector<std::vector<Int>> blocks;
  std::vector<Int> block_sums;
};

// Throws dimension_mismatch unless perm.degree() == partition.n.
PartitionImage apply_to_partition(const Permutation& perm,
                                  const ConstantSumPartition& partition);

// loose: every image block again sums to the partition's constant.
// strict: the image family is the original partition, as a set of sets.
enum class MagicMode { loose, strict };

bool is_magic_partition_permutation(const Permutation& perm,
                                    const ConstantSumPartition& partition,
                                    MagicMode mode = MagicMode::loose);

enum class CountMethod { brute, formula };

// Number of permutations of {1..n} that send every block of the partition to
// a block-sized set summing to the constant (the loose predicate above).
//
// formula: every valid image family is a constant-sum partition with the same
// size multiset, and each family is reached by (product over distinct sizes s
// of mult_s!) * (product over blocks of n_i!) permutations, so the count is
// that factor times the oracle's family count. brute walks all n! permutations
// and throws budget_exceeded for n > 10. Throws std::invalid_argument when the
// partition itself does not verify.
Int count_magic_partition_permutations(const ConstantSumPartition& partition,
                                       CountMethod method,
                                       std::uint64_t oracle_budget = SearchLimits{}.oracle_nodes);

}  // namespace cspart
