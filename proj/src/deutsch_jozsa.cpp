#include "dqc1/deutsch_jozsa.hpp"

#include <cmath>

#include "dqc1/reduction.hpp"
#include "dqc1/rng.hpp"

namespace dqc1 {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ConstantPlus: return "constant_plus";
    case Verdict::ConstantMinus: return "constant_minus";
    case Verdict::Balanced: return "balanced";
  }
  return "balanced";
}

namespace {

constexpr double boolean_phase_tol = 1e-6;

void require_boolean_mask(const PhaseMask& mask) {
  const double pi = two_pi / 2;
  const double* phi = mask.phases().data();
  const std::int64_t n = mask.pixel_count();
  for (std::int64_t i = 0; i < n; ++i) {
    if (circle_distance(phi[i], 0.0) > boolean_phase_tol &&
        circle_distance(phi[i], pi) > boolean_phase_tol)
      throw ValidationError("oracle mask has a phase that is neither 0 nor pi");
  }
}

Verdict classify(double statistic, double threshold) {
  if (statistic > threshold) return Verdict::ConstantPlus;
  if (statistic < -threshold) return Verdict::ConstantMinus;
  return Verdict::Balanced;
}

}  // namespace

OracleVerdict run_dj(const PhaseMask& mask, const IntensityProfile& profile,
                     DephasingParam p,
                     const std::optional<MeasurementConfig>& config,
                     double threshold, int threads) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw ValidationError("decision threshold must lie in (0, 1)");
  require_boolean_mask(mask);

  OracleVerdict result;
  result.threshold = threshold;
  if (config) {
    // sigma_y is zero for {0, pi} masks up to noise; only sigma_x is measured.
    const CountRecord rec =
        sample_basis(mask, profile, p, PauliAxis::X, *config, threads);
    const auto n = static_cast<double>(rec.total());
    result.statistic = static_cast<double>(rec.n_plus - rec.n_minus) / n;
    result.stat_err =
        std::sqrt(std::max(0.0, 1.0 - result.statistic * result.statistic) / n);
    result.photons_used = rec.total();
  } else {
    const PhasorSum ps = weighted_phasor_sum(mask, profile, threads);
    result.statistic = p.coherence_factor() * ps.cos_sum;
  }
  result.verdict = classify(result.statistic, threshold);
  return result;
}

SweepResult resolution_sweep(const std::vector<int>& cell_sizes, int trials,
                             const IntensityProfile& profile, DephasingParam p,
                             const std::optional<MeasurementConfig>& config,
                             double threshold, std::uint64_t mask_seed,
                             int threads) {
  if (trials < 0) throw ValidationError("trial count must be nonnegative");
  const PanelDims dims = profile.dims();

  SweepResult result;
  for (const int cell : cell_sizes) {
    if (cell < 1) throw ValidationError("cell sizes must be at least 1");
    NeumaierSum sum, sum_sq;
    int miscalls = 0;
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t trial_mask_seed =
          derive_seed(mask_seed, static_cast<std::uint64_t>(cell),
                      static_cast<std::uint64_t>(t));
      const PhaseMask mask =
          make_random_balanced(dims, {cell, cell}, trial_mask_seed);

      std::optional<MeasurementConfig> trial_config = config;
      if (trial_config)
        trial_config->seed =
            derive_seed(config->seed, static_cast<std::uint64_t>(cell),
                        static_cast<std::uint64_t>(t));

      const OracleVerdict v =
          run_dj(mask, profile, p, trial_config, threshold, threads);
      result.rows.push_back({cell, t, trial_mask_seed, v.statistic, v.stat_err,
                             v.verdict});
      sum.add(v.statistic);
      sum_sq.add(v.statistic * v.statistic);
      if (v.verdict != Verdict::Balanced) ++miscalls;
    }
    SweepSummary summary;
    summary.cell_size = cell;
    summary.trials = trials;
    summary.misclassified = miscalls;
    if (trials > 0) {
      const double mean = sum.value() / trials;
      summary.mean_statistic = mean;
      if (trials > 1)
        summary.stddev_statistic = std::sqrt(
            std::max(0.0, (sum_sq.value() - trials * mean * mean) / (trials - 1)));
    }
    result.summaries.push_back(summary);
  }
  return result;
}

}  // namespace dqc1
