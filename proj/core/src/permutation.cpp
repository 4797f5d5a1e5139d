#include "cspart/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "cspart/oracle.hpp"

namespace cspart {

Permutation::Permutation(std::vector<Int> image) : image_(std::move(image)) {
  const Int n = static_cast<Int>(image_.size());
  if (n < 1) throw std::invalid_argument("permutation must have degree >= 1");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Int v : image_) {
    if (v < 1 || v > n) {
      std::ostringstream os;
      os << "permutation image value " << v << " outside 1.." << n;
      throw std::invalid_argument(os.str());
    }
    if (seen[static_cast<size_t>(v - 1)]) {
      std::ostringstream os;
      os << "permutation image repeats " << v;
      throw std::invalid_argument(os.str());
    }
    seen[static_cast<size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(Int n) {
  if (n < 1) throw std::invalid_argument("permutation must have degree >= 1");
  std::vector<Int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), Int{1});
  return Permutation(std::move(image));
}

Int Permutation::apply(Int i) const {
  if (i < 1 || i > degree()) throw std::out_of_range("permutation applied outside 1..n");
  return image_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<Int> inv(image_.size());
  for (Int i = 1; i <= degree(); ++i)
    inv[static_cast<size_t>(image_[static_cast<size_t>(i - 1)] - 1)] = i;
  return Permutation(std::move(inv));
}

PartitionImage apply_to_partition(const Permutation& perm,
                                  const ConstantSumPartition& partition) {
  if (perm.degree() != partition.n) {
    std::ostringstream os;
    os << "permutation degree " << perm.degree() << " does not match n = " << partition.n;
    throw dimension_mismatch(os.str());
  }
  PartitionImage image;
  image.n = partition.n;
  image.blocks.reserve(partition.blocks.size());
  image.block_sums.reserve(partition.blocks.size());
  for (const auto& block : partition.blocks) {
    std::vector<Int> mapped;
    mapped.reserve(block.size());
    Int sum = 0;
    for (Int v : block) {
      const Int w = perm.apply(v);
      mapped.push_back(w);
      sum = checked_add(sum, w);
    }
    image.blocks.push_back(std::move(mapped));
    image.block_sums.push_back(sum);
  }
  return image;
}

bool is_magic_partition_permutation(const Permutation& perm,
                                    const ConstantSumPartition& partition, MagicMode mode) {
  const PartitionImage image = apply_to_partition(perm, partition);
  for (Int sum : image.block_sums)
    if (sum != partition.magic_constant) return false;
  if (mode == MagicMode::loose) return true;

  ConstantSumPartition as_partition;
  as_partition.n = partition.n;
  as_partition.magic_constant = partition.magic_constant;
  as_partition.blocks = image.blocks;
  return canonicalized(std::move(as_partition)).blocks == canonicalized(partition).blocks;
}

Int count_magic_partition_permutations(const ConstantSumPartition& partition,
                                       CountMethod method, std::uint64_t oracle_budget) {
  const VerificationReport check = verify(partition);
  if (!check.valid)
    throw std::invalid_argument(
        "count requires a valid constant-sum partition; run verify for details");

  const ConstantSumPartition canon = canonicalized(partition);

  if (method == CountMethod::brute) {
    if (canon.n > 10)
      throw budget_exceeded("brute-force count walks n! permutations; refusing n > 10");
    std::vector<Int> image(static_cast<size_t>(canon.n));
    std::iota(image.begin(), image.end(), Int{1});
    Int count = 0;
    do {
      bool magic = true;
      for (const auto& block : canon.blocks) {
        Int sum = 0;
        for (Int v : block) sum += image[static_cast<size_t>(v - 1)];
        if (sum != canon.magic_constant) {
          magic = false;
          break;
        }
      }
      if (magic) ++count;
    } while (std::next_permutation(image.begin(), image.end()));
    return count;
  }

  std::vector<Int> sizes;
  sizes.reserve(canon.blocks.size());
  for (const auto& block : canon.blocks) sizes.push_back(static_cast<Int>(block.size()));
  PartitionSpec spec(canon.n, sizes);

  const OracleResult families = oracle_enumerate(spec, std::nullopt, oracle_budget);
  if (families.capped)
    throw budget_exceeded("family enumeration ran out of nodes; raise the budget");

  Int factor = 1;
  std::map<Int, Int> multiplicity;
  for (Int s : spec.sizes()) ++multiplicity[s];
  for (const auto& [size, mult] : multiplicity)
    for (Int k = 2; k <= mult; ++k) factor = checked_mul(factor, k);
  for (Int s : spec.sizes())
    for (Int k = 2; k <= s; ++k) factor = checked_mul(factor, k);
  return checked_mul(families.count, factor);
}

}  // namespace cspart
