#include "dqc1/phase_mask.hpp"

#include <vector>

#include "dqc1/rng.hpp"

namespace dqc1 {

PhaseMask::PhaseMask(GridXd phases) : phases_(std::move(phases)) {
  if (phases_.rows() < 1 || phases_.cols() < 1)
    throw ValidationError("phase mask must be at least 1x1");
  phases_ = phases_.unaryExpr([](double x) { return wrap_two_pi(x); });
}

PhaseMask make_constant(PanelDims dims, double phase) {
  validate_dims(dims);
  return PhaseMask(GridXd::Constant(dims.height, dims.width, wrap_two_pi(phase)));
}

PhaseMask make_half_split(PanelDims dims, double phase_upper, double phase_lower) {
  validate_dims(dims);
  if (dims.height % 2 != 0)
    throw ValidationError("half-split mask needs an even panel height");
  GridXd g(dims.height, dims.width);
  g.topRows(dims.height / 2) = wrap_two_pi(phase_upper);
  g.bottomRows(dims.height / 2) = wrap_two_pi(phase_lower);
  return PhaseMask(std::move(g));
}

PhaseMask make_random_balanced(PanelDims dims, CellSpec cells, std::uint64_t seed) {
  validate_dims(dims);
  validate_cells(cells);
  const int ncx = (dims.width + cells.width - 1) / cells.width;
  const int ncy = (dims.height + cells.height - 1) / cells.height;
  const std::int64_t ncells = static_cast<std::int64_t>(ncx) * ncy;
  if (ncells % 2 != 0)
    throw ValidationError("balanced mask needs an even cell count, got " +
                          std::to_string(ncells));

  // Half zeros, half ones, shuffled. Cell order is row-major.
  std::vector<std::uint8_t> level(static_cast<std::size_t>(ncells), 0);
  for (std::int64_t i = ncells / 2; i < ncells; ++i)
    level[static_cast<std::size_t>(i)] = 1;
  RandomEngine rng = make_engine(seed);
  fisher_yates_shuffle(level, rng);

  const double pi = two_pi / 2;
  GridXd g(dims.height, dims.width);
  for (int cy = 0; cy < ncy; ++cy) {
    const int row0 = cy * cells.height;
    const int rows = std::min(cells.height, dims.height - row0);
    for (int cx = 0; cx < ncx; ++cx) {
      const int col0 = cx * cells.width;
      const int cols = std::min(cells.width, dims.width - col0);
      const double phase =
          level[static_cast<std::size_t>(cy) * ncx + cx] ? pi : 0.0;
      g.block(row0, col0, rows, cols) = phase;
    }
  }
  return PhaseMask(std::move(g));
}

PhaseMask make_linear_ramp(PanelDims dims, double phi_start, double phi_end,
                           RampForm form) {
  validate_dims(dims);
  GridXd g(dims.height, dims.width);
  const double n_y = static_cast<double>(dims.height);
  for (int j = 0; j < dims.height; ++j) {
    const double f = static_cast<double>(j) / n_y;
    const double phi = form == RampForm::Span
                           ? phi_start + f * (phi_end - phi_start)
                           : phi_start + f * phi_end;
    g.row(j) = phi;
  }
  return PhaseMask(std::move(g));
}

PhaseMask quantize(const PhaseMask& mask, int levels) {
  if (levels < 2) throw ValidationError("quantization needs at least 2 levels");
  const double l = static_cast<double>(levels);
  GridXd g = mask.phases().unaryExpr([l, levels](double phi) {
    auto k = static_cast<std::int64_t>(std::floor(phi * l / two_pi + 0.5));
    if (k >= levels) k -= levels;  // 2*pi wraps to 0
    return two_pi * static_cast<double>(k) / l;
  });
  return PhaseMask(std::move(g));
}

}  // namespace dqc1
