#pragma once

#include <cstdint>
#include <vector>

#include "dqc1/beam_profile.hpp"
#include "dqc1/rng.hpp"

namespace dqc1 {

/// Walker/Vose alias table over the flattened (row-major) pixel weights of a
/// profile. Build is O(n) with a fixed processing order; draws are O(1):
/// one bounded index plus one uniform coin.
class AliasTable {
 public:
  explicit AliasTable(const IntensityProfile& profile);

  std::int64_t size() const { return static_cast<std::int64_t>(accept_.size()); }

  std::int64_t draw(RandomEngine& rng) const {
    const auto idx =
        static_cast<std::size_t>(bounded_uniform(rng, accept_.size()));
    return uniform_double(rng) < accept_[idx] ? static_cast<std::int64_t>(idx)
                                              : alias_[idx];
  }

 private:
  std::vector<double> accept_;
  std::vector<std::int64_t> alias_;
};

}  // namespace dqc1
