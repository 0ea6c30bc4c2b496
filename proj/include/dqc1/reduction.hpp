#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

namespace dqc1 {

/// Neumaier-compensated accumulator. The running compensation captures the
/// rounding error of every add, so million-term sums stay accurate to a few
/// ulps of the result instead of growing with the term count.
class NeumaierSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Compensated sum of an Eigen array expression, evaluated in storage order.
template <typename Derived>
double compensated_sum(const Eigen::ArrayBase<Derived>& expr) {
  NeumaierSum acc;
  const auto& v = expr.derived();
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j) acc.add(v(i, j));
  return acc.value();
}

/// Number of elements per reduction block. Fixed so that the partition of a
/// grid into blocks, and hence the combination order, never depends on the
/// worker count; block results are folded left to right.
inline constexpr std::int64_t reduce_block_size = 1 << 15;

inline std::int64_t reduce_block_count(std::int64_t n) {
  return n <= 0 ? 0 : (n + reduce_block_size - 1) / reduce_block_size;
}

/// Deterministic blocked reduction: `block_value(begin, len)` is evaluated
/// for each fixed-size block of [0, n) and the per-block values are combined
/// in block order with compensation. Callers may evaluate blocks in parallel;
/// the combination here is always sequential in index order.
template <typename BlockFn>
double combine_blocks(std::int64_t n, BlockFn&& block_value) {
  NeumaierSum acc;
  const std::int64_t nblocks = reduce_block_count(n);
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::int64_t begin = b * reduce_block_size;
    const std::int64_t len = std::min(reduce_block_size, n - begin);
    acc.add(block_value(begin, len));
  }
  return acc.value();
}

}  // namespace dqc1
