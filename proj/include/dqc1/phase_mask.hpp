#pragma once

#include <cstdint>

#include "dqc1/grid.hpp"

namespace dqc1 {

/// Per-pixel modulation phases in [0, 2*pi), the diagonal of the encoded
/// unitary. Immutable after construction; any grid handed in is reduced
/// modulo 2*pi.
class PhaseMask {
 public:
  explicit PhaseMask(GridXd phases);

  PanelDims dims() const {
    return {static_cast<int>(phases_.cols()), static_cast<int>(phases_.rows())};
  }
  int width() const { return static_cast<int>(phases_.cols()); }
  int height() const { return static_cast<int>(phases_.rows()); }
  std::int64_t pixel_count() const { return phases_.size(); }

  const GridXd& phases() const { return phases_; }

 private:
  GridXd phases_;
};

/// Which linear-ramp parameterization a ramp mask uses. Span runs the phase
/// from phi_start at row 0 to (just short of) phi_end at the last row;
/// AdditiveEnd keeps phi_start as an offset and scales phi_end by the row
/// fraction instead. Span is the default and the one the reference traces
/// below are quoted for; AdditiveEnd is kept for comparison runs.
enum class RampForm { Span, AdditiveEnd };

PhaseMask make_constant(PanelDims dims, double phase);

/// Two-level mask: rows 0..height/2-1 carry phase_upper, the rest
/// phase_lower. Height must be even.
PhaseMask make_half_split(PanelDims dims, double phase_upper, double phase_lower);

/// Tiles the panel with cells and assigns exactly half of them phase 0 and
/// half phase pi, by a seeded Fisher-Yates shuffle (mt19937_64; see rng.hpp).
/// Trailing partial cells count as cells, so the cell count must be even.
PhaseMask make_random_balanced(PanelDims dims, CellSpec cells, std::uint64_t seed);

/// phi(x, y_j) = phi_start + (j / height) * (phi_end - phi_start) for Span,
/// phi_start + (j / height) * phi_end for AdditiveEnd; constant along x.
PhaseMask make_linear_ramp(PanelDims dims, double phi_start, double phi_end,
                           RampForm form = RampForm::Span);

/// Snap every phase to the nearest of `levels` steps of 2*pi/levels,
/// rounding half up and wrapping level `levels` back to 0. Idempotent.
PhaseMask quantize(const PhaseMask& mask, int levels);

}  // namespace dqc1
