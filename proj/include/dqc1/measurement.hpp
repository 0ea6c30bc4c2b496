#pragma once

#include <cstdint>

#include "dqc1/dqc1.hpp"

namespace dqc1 {

/// How a basis measurement turns the photon budget into counts.
/// PerPhoton walks the physical picture one photon at a time: a pixel drawn
/// from the beam distribution, then a Bernoulli outcome from that pixel's
/// phase. Binomial draws the aggregate count directly from the analytic
/// outcome probability. The two have identical outcome distributions;
/// Binomial is the fast path for large budgets.
enum class SampleMode { PerPhoton, Binomial };

struct MeasurementConfig {
  std::int64_t photons_per_basis = 100000;
  std::uint64_t seed = 0;
  SampleMode mode = SampleMode::Binomial;
};

/// Outcome tally of one projective basis; n_plus + n_minus equals the budget.
struct CountRecord {
  PauliAxis basis = PauliAxis::X;
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;

  std::int64_t total() const { return n_plus + n_minus; }
};

/// Simulate photons_per_basis projective measurements along sigma_x or
/// sigma_y. The budget is split into fixed shards with seeds derived from
/// (seed, basis, shard), merged by summation, so counts are reproducible for
/// a given seed at any worker count.
CountRecord sample_basis(const PhaseMask& mask, const IntensityProfile& profile,
                         DephasingParam p, PauliAxis basis,
                         const MeasurementConfig& config, int threads = 1);

/// Plug-in estimator from the two basis tallies: component (n+ - n-)/N with
/// standard error sqrt((1 - s^2)/N).
TraceEstimate estimate_from_counts(const CountRecord& x, const CountRecord& y);

/// sample_basis over X and Y plus estimate_from_counts.
TraceEstimate monte_carlo_trace(const PhaseMask& mask,
                                const IntensityProfile& profile,
                                DephasingParam p,
                                const MeasurementConfig& config,
                                int threads = 1);

}  // namespace dqc1
