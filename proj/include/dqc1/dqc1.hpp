#pragma once

#include <complex>
#include <cstdint>

#include "dqc1/beam_profile.hpp"
#include "dqc1/density_matrix.hpp"
#include "dqc1/phase_mask.hpp"

namespace dqc1 {

/// Degree of polarization dephasing; scales coherences by (1 - 2p).
/// p = 0 is ideal, p = 1/2 wipes the coherences out entirely.
class DephasingParam {
 public:
  explicit DephasingParam(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 0.5))
      throw ValidationError("dephasing parameter must lie in [0, 1/2]");
  }
  double value() const { return p_; }
  double coherence_factor() const { return 1.0 - 2.0 * p_; }

 private:
  double p_;
};

/// Complex trace result: re tracks <sigma_x>, im tracks <sigma_y>.
struct TraceEstimate {
  double re = 0.0;
  double im = 0.0;
  double stat_err_re = 0.0;
  double stat_err_im = 0.0;
  double sys_err_re = 0.0;
  double sys_err_im = 0.0;
  std::int64_t photons_used = 0;  // 0 for the analytic path
};

/// Beam-weighted phasor components: cos_sum = sum c_ij cos(phi_ij),
/// sin_sum = sum c_ij sin(phi_ij). Accumulated with compensation over fixed
/// blocks combined in index order, so the result is independent of how many
/// workers evaluate the blocks.
struct PhasorSum {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

PhasorSum weighted_phasor_sum(const PhaseMask& mask,
                              const IntensityProfile& profile, int threads = 1);

/// Unweighted counterpart used by the flat-beam reference trace.
PhasorSum mean_phasor_sum(const PhaseMask& mask, int threads = 1);

/// Polarization state after the controlled phase panel and the partial trace
/// over position: diagonal 1/2, coherence (1-2p)/2 * sum c_ij e^{-i phi_ij}.
PolarizationDensityMatrix apply_slm(const PhaseMask& mask,
                                    const IntensityProfile& profile,
                                    DephasingParam p, int threads = 1);

/// (1-2p) * (sum c cos phi, sum c sin phi); the dephasing factor multiplies a
/// p-independent sum, so estimates at different p agree bit-for-bit after
/// rescaling. Statistical and systematic errors are left at zero; see
/// propagate_systematics for the latter.
TraceEstimate analytic_trace(const PhaseMask& mask,
                             const IntensityProfile& profile, DephasingParam p,
                             int threads = 1);

/// Flat-beam, dephasing-free reference: sum e^{i phi} / (width * height).
std::complex<double> exact_normalized_trace(const PhaseMask& mask,
                                            int threads = 1);

/// Systematic uncertainty of the two trace components, as the quadrature sum
/// of two independent contributions:
///  - phase discretization, one step delta_phi = 2*pi/levels per pixel;
///  - Poissonian counting noise delta_C = sqrt(C) per detection cell, when a
///    raw counts grid is supplied (its cells must tile the mask).
/// Without a counts grid the Poisson term is zero and the flag below says so.
struct SystematicError {
  double re = 0.0;
  double im = 0.0;
  bool poisson_term_included = false;
};

SystematicError propagate_systematics(const PhaseMask& mask,
                                      const IntensityProfile& profile,
                                      DephasingParam p, int levels,
                                      const CountsGrid* counts = nullptr);

}  // namespace dqc1
