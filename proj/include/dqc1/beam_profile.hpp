#pragma once

#include <cstdint>

#include "dqc1/grid.hpp"

namespace dqc1 {

/// Normalized transverse beam intensity: nonnegative per-pixel weights
/// summing to 1 within 1e-12 (compensated accumulation). This is both the
/// weighting of the trace sums and the sampling distribution of photon
/// positions.
class IntensityProfile {
 public:
  /// Normalizes arbitrary nonnegative weights to unit sum.
  static IntensityProfile from_weights(GridXd raw);

  PanelDims dims() const {
    return {static_cast<int>(weights_.cols()), static_cast<int>(weights_.rows())};
  }
  std::int64_t pixel_count() const { return weights_.size(); }
  const GridXd& weights() const { return weights_; }

 private:
  explicit IntensityProfile(GridXd weights) : weights_(std::move(weights)) {}
  GridXd weights_;
};

/// Measured beam scan: one count rate per square detection cell. The panel it
/// covers is (cells_x * cell_size) x (cells_y * cell_size) pixels.
struct CountsGrid {
  int cells_x = 0;
  int cells_y = 0;
  int cell_size = 0;  // pixels per cell edge
  GridXd counts;      // cells_y rows x cells_x cols, nonnegative rates

  PanelDims panel_dims() const {
    return {cells_x * cell_size, cells_y * cell_size};
  }
};

void validate_counts(const CountsGrid& grid);

/// Uniform weights 1/(width*height).
IntensityProfile flat(PanelDims dims);

/// exp(-2 r^2 / waist^2) sampled at pixel centers (x + 0.5, y + 0.5), then
/// normalized. A smooth stand-in for a measured beam.
IntensityProfile gaussian(PanelDims dims, double center_x, double center_y,
                          double waist);

/// Spread each cell's count rate evenly over its pixels and normalize:
/// c_ij = C_IJ / (sum C * cell_size^2). The grid must tile `dims` exactly.
IntensityProfile from_counts(const CountsGrid& grid, PanelDims dims);
IntensityProfile from_counts(const CountsGrid& grid);

}  // namespace dqc1
