#include "dqc1/dqc1.hpp"

#include <algorithm>
#include <future>
#include <vector>

#include "dqc1/reduction.hpp"

namespace dqc1 {
namespace {

std::string dims_str(PanelDims d) {
  return std::to_string(d.width) + "x" + std::to_string(d.height);
}

void require_same_dims(PanelDims a, PanelDims b, const char* what) {
  if (!(a == b))
    throw DimsError(std::string(what) + ": mask is " + dims_str(a) +
                    " but profile is " + dims_str(b));
}

struct BlockPhasor {
  double cos_part = 0.0;
  double sin_part = 0.0;
};

// Evaluates eval(begin, len) for every fixed-size block of [0, n), possibly
// on several workers, then folds the per-block values in block order. The
// partition and fold order are functions of n alone, so the result does not
// depend on the thread count.
template <typename EvalBlock>
PhasorSum blocked_phasor_reduce(std::int64_t n, int threads, EvalBlock&& eval) {
  const std::int64_t nblocks = reduce_block_count(n);
  std::vector<BlockPhasor> partial(static_cast<std::size_t>(nblocks));
  auto run_range = [&](std::int64_t b0, std::int64_t b1) {
    for (std::int64_t b = b0; b < b1; ++b) {
      const std::int64_t begin = b * reduce_block_size;
      const std::int64_t len = std::min(reduce_block_size, n - begin);
      partial[static_cast<std::size_t>(b)] = eval(begin, len);
    }
  };

  const int workers =
      static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), nblocks));
  if (workers <= 1) {
    run_range(0, nblocks);
  } else {
    std::vector<std::future<void>> tasks;
    tasks.reserve(static_cast<std::size_t>(workers));
    const std::int64_t per = (nblocks + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t b0 = w * per;
      const std::int64_t b1 = std::min<std::int64_t>(b0 + per, nblocks);
      if (b0 >= b1) break;
      tasks.push_back(
          std::async(std::launch::async, [&run_range, b0, b1] { run_range(b0, b1); }));
    }
    for (auto& t : tasks) t.get();
  }

  NeumaierSum cos_acc, sin_acc;
  for (const auto& bp : partial) {
    cos_acc.add(bp.cos_part);
    sin_acc.add(bp.sin_part);
  }
  return {cos_acc.value(), sin_acc.value()};
}

BlockPhasor phasor_block(const double* phases, const double* weights,
                         std::int64_t len) {
  Eigen::Map<const Eigen::ArrayXd> phi(phases, len);
  NeumaierSum cos_acc, sin_acc;
  if (weights) {
    Eigen::Map<const Eigen::ArrayXd> w(weights, len);
    const Eigen::ArrayXd c = w * phi.cos();
    const Eigen::ArrayXd s = w * phi.sin();
    for (std::int64_t i = 0; i < len; ++i) {
      cos_acc.add(c(i));
      sin_acc.add(s(i));
    }
  } else {
    const Eigen::ArrayXd c = phi.cos();
    const Eigen::ArrayXd s = phi.sin();
    for (std::int64_t i = 0; i < len; ++i) {
      cos_acc.add(c(i));
      sin_acc.add(s(i));
    }
  }
  return {cos_acc.value(), sin_acc.value()};
}

}  // namespace

PhasorSum weighted_phasor_sum(const PhaseMask& mask,
                              const IntensityProfile& profile, int threads) {
  require_same_dims(mask.dims(), profile.dims(), "weighted phasor sum");
  const double* phases = mask.phases().data();
  const double* weights = profile.weights().data();
  auto eval = [phases, weights](std::int64_t begin, std::int64_t len) {
    return phasor_block(phases + begin, weights + begin, len);
  };
  auto [c, s] = blocked_phasor_reduce(mask.pixel_count(), threads, eval);
  return {c, s};
}

PhasorSum mean_phasor_sum(const PhaseMask& mask, int threads) {
  const double* phases = mask.phases().data();
  auto eval = [phases](std::int64_t begin, std::int64_t len) {
    return phasor_block(phases + begin, nullptr, len);
  };
  const std::int64_t n = mask.pixel_count();
  auto [c, s] = blocked_phasor_reduce(n, threads, eval);
  const double inv_n = 1.0 / static_cast<double>(n);
  return {c * inv_n, s * inv_n};
}

PolarizationDensityMatrix apply_slm(const PhaseMask& mask,
                                    const IntensityProfile& profile,
                                    DephasingParam p, int threads) {
  require_same_dims(mask.dims(), profile.dims(), "apply_slm");
  const PhasorSum ps = weighted_phasor_sum(mask, profile, threads);
  // The H component picks up e^{-i phi}; dephasing damps the coherence.
  const std::complex<double> hv =
      0.5 * p.coherence_factor() * std::complex<double>(ps.cos_sum, -ps.sin_sum);
  Eigen::Matrix2cd m;
  m << 0.5, hv, std::conj(hv), 0.5;
  return PolarizationDensityMatrix::from_matrix(m);
}

TraceEstimate analytic_trace(const PhaseMask& mask,
                             const IntensityProfile& profile, DephasingParam p,
                             int threads) {
  require_same_dims(mask.dims(), profile.dims(), "analytic_trace");
  const PhasorSum ps = weighted_phasor_sum(mask, profile, threads);
  TraceEstimate est;
  est.re = p.coherence_factor() * ps.cos_sum;
  est.im = p.coherence_factor() * ps.sin_sum;
  return est;
}

std::complex<double> exact_normalized_trace(const PhaseMask& mask, int threads) {
  const PhasorSum ps = mean_phasor_sum(mask, threads);
  return {ps.cos_sum, ps.sin_sum};
}

SystematicError propagate_systematics(const PhaseMask& mask,
                                      const IntensityProfile& profile,
                                      DephasingParam p, int levels,
                                      const CountsGrid* counts) {
  if (levels < 2) throw ValidationError("systematics need at least 2 levels");
  require_same_dims(mask.dims(), profile.dims(), "propagate_systematics");

  const double factor = p.coherence_factor();
  const double dphi = two_pi / static_cast<double>(levels);

  // Phase-step term: independent error of one quantization step per pixel,
  // entering <sigma_x> through -sin and <sigma_y> through cos.
  NeumaierSum re2, im2;
  const double* phi = mask.phases().data();
  const double* w = profile.weights().data();
  const std::int64_t n = mask.pixel_count();
  for (std::int64_t i = 0; i < n; ++i) {
    const double scale = factor * w[i] * dphi;
    const double dre = scale * std::sin(phi[i]);
    const double dim = scale * std::cos(phi[i]);
    re2.add(dre * dre);
    im2.add(dim * dim);
  }

  SystematicError err;
  if (counts) {
    validate_counts(*counts);
    if (!(counts->panel_dims() == mask.dims()))
      throw DimsError("counts grid does not tile the mask panel");
    const double total = compensated_sum(counts->counts);
    const double cell_px =
        static_cast<double>(counts->cell_size) * counts->cell_size;
    // Sensitivity of the normalized sums to one cell's rate, with the
    // normalization held fixed: factor * (cell mean of cos|sin) / total.
    for (int cy = 0; cy < counts->cells_y; ++cy) {
      for (int cx = 0; cx < counts->cells_x; ++cx) {
        NeumaierSum cell_cos, cell_sin;
        const int row0 = cy * counts->cell_size;
        const int col0 = cx * counts->cell_size;
        for (int r = 0; r < counts->cell_size; ++r)
          for (int c = 0; c < counts->cell_size; ++c) {
            const double ph = mask.phases()(row0 + r, col0 + c);
            cell_cos.add(std::cos(ph));
            cell_sin.add(std::sin(ph));
          }
        const double mc = cell_cos.value() / cell_px;
        const double ms = cell_sin.value() / cell_px;
        const double dre = factor * mc / total;
        const double dim = factor * ms / total;
        const double c_ij = counts->counts(cy, cx);
        re2.add(dre * dre * c_ij);
        im2.add(dim * dim * c_ij);
      }
    }
    err.poisson_term_included = true;
  }

  err.re = std::sqrt(re2.value());
  err.im = std::sqrt(im2.value());
  return err;
}

}  // namespace dqc1
