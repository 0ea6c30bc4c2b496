#include "dqc1/alias_table.hpp"

namespace dqc1 {

AliasTable::AliasTable(const IntensityProfile& profile) {
  const double* w = profile.weights().data();
  const auto n = static_cast<std::size_t>(profile.pixel_count());
  accept_.assign(n, 1.0);
  alias_.assign(n, 0);

  std::vector<double> scaled(n);
  const auto nd = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = w[i] * nd;

  // Indices are visited in ascending order and the worklists are stacks, so
  // the table layout is a pure function of the weights.
  std::vector<std::size_t> small, large;
  small.reserve(n);
  large.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    (scaled[i] < 1.0 ? small : large).push_back(i);

  while (!small.empty() && !large.empty()) {
    const std::size_t s = small.back();
    const std::size_t l = large.back();
    small.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = static_cast<std::int64_t>(l);
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers in either list are ~1 up to rounding; take them as certain.
  for (const std::size_t i : small) accept_[i] = 1.0;
  for (const std::size_t i : large) accept_[i] = 1.0;
}

}  // namespace dqc1
