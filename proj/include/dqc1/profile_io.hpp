#pragma once

#include <filesystem>

#include "dqc1/beam_profile.hpp"

namespace dqc1 {

/// Set by load_profile: the raw sum found in the file, and whether it was far
/// enough from 1 (more than 1e-6) that the caller should warn about the
/// renormalization.
struct ProfileLoadStats {
  double input_sum = 0.0;
  bool renormalized = false;
};

/// IPROF1 <width> <height>, then height rows of weights.
void save_profile(const IntensityProfile& profile,
                  const std::filesystem::path& path);

/// Loads and renormalizes to unit sum. Negative weights are rejected.
IntensityProfile load_profile(const std::filesystem::path& path,
                              ProfileLoadStats* stats = nullptr);

/// CGRID1 <cells_x> <cells_y> <cell_size>, then cells_y rows of count rates.
void save_counts(const CountsGrid& grid, const std::filesystem::path& path);

CountsGrid load_counts(const std::filesystem::path& path);

}  // namespace dqc1
