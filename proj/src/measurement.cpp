#include "dqc1/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <optional>
#include <vector>

#include "dqc1/alias_table.hpp"

namespace dqc1 {
namespace {

// Photons per shard. Fixed so the shard partition, and with it every derived
// seed, is independent of the worker count.
constexpr std::int64_t shard_size = 1 << 20;

std::uint64_t basis_tag(PauliAxis basis) {
  return basis == PauliAxis::X ? 0u : 1u;
}

double basis_expectation(const PhaseMask& mask, const IntensityProfile& profile,
                         DephasingParam p, PauliAxis basis, int threads) {
  const PhasorSum ps = weighted_phasor_sum(mask, profile, threads);
  return p.coherence_factor() *
         (basis == PauliAxis::X ? ps.cos_sum : ps.sin_sum);
}

std::int64_t sample_shard_binomial(RandomEngine& rng, std::int64_t n, double q) {
  return binomial_draw(rng, n, std::clamp(q, 0.0, 1.0));
}

std::int64_t sample_shard_per_photon(RandomEngine& rng, std::int64_t n,
                                     const AliasTable& table,
                                     const double* phases, double factor,
                                     PauliAxis basis) {
  std::int64_t plus = 0;
  for (std::int64_t k = 0; k < n; ++k) {
    const std::int64_t pixel = table.draw(rng);
    const double phi = phases[pixel];
    const double t = basis == PauliAxis::X ? std::cos(phi) : std::sin(phi);
    const double q = 0.5 * (1.0 + factor * t);
    if (uniform_double(rng) < q) ++plus;
  }
  return plus;
}

}  // namespace

CountRecord sample_basis(const PhaseMask& mask, const IntensityProfile& profile,
                         DephasingParam p, PauliAxis basis,
                         const MeasurementConfig& config, int threads) {
  if (basis == PauliAxis::Z)
    throw ValidationError("sample_basis measures X or Y");
  if (config.photons_per_basis < 1)
    throw ValidationError("photon budget must be at least 1");
  if (!(mask.dims() == profile.dims()))
    throw DimsError("sample_basis: mask and profile dimensions differ");

  const std::int64_t n = config.photons_per_basis;
  const std::int64_t nshards = (n + shard_size - 1) / shard_size;

  double q_bar = 0.0;
  std::optional<AliasTable> table;  // built once per call; PerPhoton only
  if (config.mode == SampleMode::Binomial) {
    q_bar = 0.5 * (1.0 + basis_expectation(mask, profile, p, basis, threads));
  } else {
    table.emplace(profile);
  }

  const double factor = p.coherence_factor();
  const double* phases = mask.phases().data();
  std::vector<std::int64_t> shard_plus(static_cast<std::size_t>(nshards), 0);

  auto run_range = [&](std::int64_t s0, std::int64_t s1) {
    for (std::int64_t s = s0; s < s1; ++s) {
      const std::int64_t count =
          std::min(shard_size, n - s * shard_size);
      RandomEngine rng(derive_seed(config.seed, basis_tag(basis),
                                   static_cast<std::uint64_t>(s)));
      shard_plus[static_cast<std::size_t>(s)] =
          config.mode == SampleMode::Binomial
              ? sample_shard_binomial(rng, count, q_bar)
              : sample_shard_per_photon(rng, count, *table, phases, factor,
                                        basis);
    }
  };

  const int workers =
      static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), nshards));
  if (workers <= 1) {
    run_range(0, nshards);
  } else {
    std::vector<std::future<void>> tasks;
    const std::int64_t per = (nshards + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::int64_t s0 = w * per;
      const std::int64_t s1 = std::min<std::int64_t>(s0 + per, nshards);
      if (s0 >= s1) break;
      tasks.push_back(
          std::async(std::launch::async, [&run_range, s0, s1] { run_range(s0, s1); }));
    }
    for (auto& t : tasks) t.get();
  }

  std::int64_t plus = 0;
  for (const std::int64_t sp : shard_plus) plus += sp;
  return {basis, plus, n - plus};
}

TraceEstimate estimate_from_counts(const CountRecord& x, const CountRecord& y) {
  if (x.basis != PauliAxis::X || y.basis != PauliAxis::Y)
    throw ValidationError("estimate_from_counts wants an X record and a Y record");
  if (x.total() < 1 || y.total() < 1)
    throw ValidationError("count records must cover at least one photon");

  auto component = [](const CountRecord& r, double& value, double& err) {
    const auto n = static_cast<double>(r.total());
    value = static_cast<double>(r.n_plus - r.n_minus) / n;
    err = std::sqrt(std::max(0.0, 1.0 - value * value) / n);
  };
  TraceEstimate est;
  component(x, est.re, est.stat_err_re);
  component(y, est.im, est.stat_err_im);
  est.photons_used = x.total() + y.total();
  return est;
}

TraceEstimate monte_carlo_trace(const PhaseMask& mask,
                                const IntensityProfile& profile,
                                DephasingParam p,
                                const MeasurementConfig& config, int threads) {
  const CountRecord x =
      sample_basis(mask, profile, p, PauliAxis::X, config, threads);
  const CountRecord y =
      sample_basis(mask, profile, p, PauliAxis::Y, config, threads);
  return estimate_from_counts(x, y);
}

}  // namespace dqc1
