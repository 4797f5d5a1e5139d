#include "cspart/types.hpp"

#include <algorithm>
#include <sstream>

namespace cspart {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

Int triangular(Int n) {
  if (n < 0) throw std::invalid_argument("triangular: n must be >= 0");
  // One of n, n+1 is even; divide it first so the product is the final value.
  if (n % 2 == 0) return checked_mul(n / 2, checked_add(n, 1));
  return checked_mul(n, (n + 1) / 2);
}

Int top_sum(Int n, Int k) {
  if (n < 0) throw std::invalid_argument("top_sum: n must be >= 0");
  if (k < 0 || k > n)
    throw std::invalid_argument("top_sum: k must satisfy 0 <= k <= n");
  return triangular(n) - triangular(n - k);
}

std::optional<Int> magic_constant(Int n, Int x) {
  if (x < 2 || n <= x)
    throw invalid_spec("magic_constant: need n > x >= 2");
  const Int t = triangular(n);
  if (t % x != 0) return std::nullopt;
  return t / x;
}

PartitionSpec::PartitionSpec(Int n, std::vector<Int> sizes)
    : n_(n), sizes_(std::move(sizes)) {
  if (n_ < 3) throw invalid_spec("spec: n must be at least 3");
  const Int x = static_cast<Int>(sizes_.size());
  if (x < 2 || x >= n_)
    throw invalid_spec("spec: block count must satisfy 2 <= x < n");
  std::sort(sizes_.begin(), sizes_.end());
  prefix_.reserve(sizes_.size());
  Int acc = 0;
  for (Int s : sizes_) {
    if (s < 1 || s >= n_)
      throw invalid_spec("spec: every block size must satisfy 1 <= size < n");
    acc = checked_add(acc, s);
    prefix_.push_back(acc);
  }
  if (acc != n_)
    throw invalid_spec("spec: block sizes must sum to n");
}

std::string PartitionSpec::describe() const {
  std::ostringstream os;
  os << "n=" << n_ << " sizes=[";
  for (size_t i = 0; i < sizes_.size(); ++i) {
    if (i) os << ",";
    os << sizes_[i];
  }
  os << "]";
  return os.str();
}

bool block_less(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];  // larger element first
  return false;
}

ConstantSumPartition canonicalized(ConstantSumPartition p) {
  for (auto& block : p.blocks)
    std::sort(block.begin(), block.end(), std::greater<Int>());
  std::sort(p.blocks.begin(), p.blocks.end(), block_less);
  return p;
}

bool partition_less(const ConstantSumPartition& a, const ConstantSumPartition& b) {
  const size_t common = std::min(a.blocks.size(), b.blocks.size());
  for (size_t i = 0; i < common; ++i) {
    if (block_less(a.blocks[i], b.blocks[i])) return true;
    if (block_less(b.blocks[i], a.blocks[i])) return false;
  }
  return a.blocks.size() < b.blocks.size();
}

}  // namespace cspart
