#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

#include "dqc1/errors.hpp"

namespace dqc1 {

/// Dense 2-D pixel grid, row-major so that flattened views walk the panel
/// row by row (row 0 = top of panel).
template <typename Scalar>
using Grid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using GridXd = Grid<double>;

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Panel size in pixels. Rows of a Grid run along y (height), columns along
/// x (width). The device this models is a full-HD 1920x1080 panel, but any
/// positive size is accepted.
struct PanelDims {
  int width = 0;
  int height = 0;

  std::int64_t pixel_count() const {
    return static_cast<std::int64_t>(width) * height;
  }
  bool operator==(const PanelDims&) const = default;
};

inline void validate_dims(PanelDims dims) {
  if (dims.width < 1 || dims.height < 1)
    throw ValidationError("panel dimensions must be at least 1x1");
}

/// Rectangular modulation cell, in pixels. Panels need not be divisible by
/// the cell size; trailing partial cells still count as cells.
struct CellSpec {
  int width = 1;
  int height = 1;
  bool operator==(const CellSpec&) const = default;
};

inline void validate_cells(CellSpec cells) {
  if (cells.width < 1 || cells.height < 1)
    throw ValidationError("cell dimensions must be at least 1x1");
}

/// Reduce an angle to the canonical range [0, 2*pi). Values already in range
/// pass through bit-exactly.
inline double wrap_two_pi(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r -= two_pi;
  return r;
}

/// Distance between two angles measured on the circle, in [0, pi].
inline double circle_distance(double a, double b) {
  double d = std::abs(wrap_two_pi(a) - wrap_two_pi(b));
  return d > two_pi / 2 ? two_pi - d : d;
}

}  // namespace dqc1
