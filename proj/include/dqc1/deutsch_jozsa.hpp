#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dqc1/measurement.hpp"

namespace dqc1 {

enum class Verdict { ConstantPlus, ConstantMinus, Balanced };

std::string to_string(Verdict v);

/// Outcome of one constant-vs-balanced test: the measured <sigma_x>, the
/// decision threshold applied to it, and the photons spent (0 = analytic).
struct OracleVerdict {
  Verdict verdict = Verdict::Balanced;
  double statistic = 0.0;
  double stat_err = 0.0;
  double threshold = 0.0;
  std::int64_t photons_used = 0;
};

/// Halfway between the balanced expectation (0) and the constant one
/// (+-(1-2p)) under the configured dephasing.
inline double default_dj_threshold(DephasingParam p) {
  return 0.5 * p.coherence_factor();
}

/// Test a {0, pi} oracle mask: measure <sigma_x> (sampled when a measurement
/// config is given, analytic otherwise) and call the verdict as
/// constant_plus above +threshold, constant_minus below -threshold, balanced
/// between. Any phase farther than 1e-6 from both 0 and pi is rejected.
OracleVerdict run_dj(const PhaseMask& mask, const IntensityProfile& profile,
                     DephasingParam p,
                     const std::optional<MeasurementConfig>& config,
                     double threshold, int threads = 1);

struct SweepRow {
  int cell_size = 0;
  int trial = 0;
  std::uint64_t seed = 0;  // mask seed of this trial
  double statistic = 0.0;
  double stat_err = 0.0;
  Verdict verdict = Verdict::Balanced;
};

struct SweepSummary {
  int cell_size = 0;
  int trials = 0;
  double mean_statistic = 0.0;
  double stddev_statistic = 0.0;
  int misclassified = 0;  // balanced oracles called constant
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepSummary> summaries;
};

/// For each cell size, run `trials` random balanced oracles on the profile's
/// panel. Mask seeds are derive_seed(mask_seed, cell_size, trial) and, when
/// sampling, measurement seeds are derive_seed(config->seed, cell_size,
/// trial), so a sweep is reproducible at any parallelism level.
SweepResult resolution_sweep(const std::vector<int>& cell_sizes, int trials,
                             const IntensityProfile& profile, DephasingParam p,
                             const std::optional<MeasurementConfig>& config,
                             double threshold, std::uint64_t mask_seed,
                             int threads = 1);

}  // namespace dqc1
