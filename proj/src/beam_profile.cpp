#include "dqc1/beam_profile.hpp"

#include <cmath>
#include <string>

#include "dqc1/reduction.hpp"

namespace dqc1 {

IntensityProfile IntensityProfile::from_weights(GridXd raw) {
  if (raw.rows() < 1 || raw.cols() < 1)
    throw ValidationError("intensity profile must be at least 1x1");
  if ((raw < 0.0).any())
    throw ValidationError("intensity weights must be nonnegative");
  const double total = compensated_sum(raw);
  if (!(total > 0.0))
    throw ValidationError("intensity profile needs positive total weight");
  raw /= total;
  IntensityProfile profile(std::move(raw));
  const double residual = compensated_sum(profile.weights_) - 1.0;
  if (std::abs(residual) > 1e-12)
    throw Error("intensity normalization failed, residual " +
                std::to_string(residual));
  return profile;
}

IntensityProfile flat(PanelDims dims) {
  validate_dims(dims);
  return IntensityProfile::from_weights(GridXd::Ones(dims.height, dims.width));
}

IntensityProfile gaussian(PanelDims dims, double center_x, double center_y,
                          double waist) {
  validate_dims(dims);
  if (!(waist > 0.0)) throw ValidationError("gaussian waist must be positive");
  GridXd g(dims.height, dims.width);
  const double inv_w2 = 2.0 / (waist * waist);
  for (int j = 0; j < dims.height; ++j) {
    const double dy = (static_cast<double>(j) + 0.5) - center_y;
    for (int i = 0; i < dims.width; ++i) {
      const double dx = (static_cast<double>(i) + 0.5) - center_x;
      g(j, i) = std::exp(-(dx * dx + dy * dy) * inv_w2);
    }
  }
  return IntensityProfile::from_weights(std::move(g));
}

void validate_counts(const CountsGrid& grid) {
  if (grid.cells_x < 1 || grid.cells_y < 1 || grid.cell_size < 1)
    throw ValidationError("counts grid needs positive cell counts and size");
  if (grid.counts.rows() != grid.cells_y || grid.counts.cols() != grid.cells_x)
    throw ValidationError("counts grid payload does not match its cell counts");
  if ((grid.counts < 0.0).any())
    throw ValidationError("counts must be nonnegative");
  if (!(grid.counts > 0.0).any())
    throw ValidationError("counts grid is all zero");
}

IntensityProfile from_counts(const CountsGrid& grid, PanelDims dims) {
  validate_counts(grid);
  validate_dims(dims);
  if (grid.panel_dims() != dims)
    throw DimsError("counts grid (" + std::to_string(grid.cells_x) + "x" +
                    std::to_string(grid.cells_y) + " cells of " +
                    std::to_string(grid.cell_size) +
                    " px) does not tile the panel");
  GridXd raw(dims.height, dims.width);
  for (int cy = 0; cy < grid.cells_y; ++cy)
    for (int cx = 0; cx < grid.cells_x; ++cx)
      raw.block(cy * grid.cell_size, cx * grid.cell_size, grid.cell_size,
                grid.cell_size) = grid.counts(cy, cx);
  return IntensityProfile::from_weights(std::move(raw));
}

IntensityProfile from_counts(const CountsGrid& grid) {
  validate_counts(grid);
  return from_counts(grid, grid.panel_dims());
}

}  // namespace dqc1
