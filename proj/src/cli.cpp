#include "dqc1/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <optional>
#include <string>
#include <vector>

#include "dqc1/deutsch_jozsa.hpp"
#include "dqc1/mask_io.hpp"
#include "dqc1/profile_io.hpp"
#include "dqc1/reduction.hpp"
#include "dqc1/report.hpp"
#include "io_util.hpp"

namespace dqc1::cli {
namespace {

constexpr double default_p = 0.08;
constexpr int default_levels = 256;
constexpr const char* default_dims = "1920x1080";

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("DQC1_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string format_double(double v) {
  std::string s;
  io::append_double(s, v);
  return s;
}

SampleMode parse_mode(const std::string& text) {
  if (text == "binomial") return SampleMode::Binomial;
  if (text == "per-photon") return SampleMode::PerPhoton;
  throw UsageError("unknown sampling mode '" + text +
                   "' (want binomial or per-photon)");
}

// Shared measurement options for trace / dj / sweep.
struct MeasureOpts {
  double p = default_p;
  std::int64_t photons = 0;  // 0 = analytic only
  std::uint64_t seed = 0;
  std::string mode = "binomial";

  std::optional<MeasurementConfig> config() const {
    if (photons <= 0) return std::nullopt;
    return MeasurementConfig{photons, seed, parse_mode(mode)};
  }
};

void add_measure_opts(CLI::App* cmd, MeasureOpts& opts, std::int64_t photon_default) {
  opts.photons = photon_default;
  cmd->add_option("--p", opts.p, "dephasing parameter in [0, 1/2]")
      ->capture_default_str();
  cmd->add_option("--photons", opts.photons,
                  "photon budget per basis; 0 = analytic only")
      ->capture_default_str();
  cmd->add_option("--seed", opts.seed, "measurement seed")->capture_default_str();
  cmd->add_option("--mode", opts.mode, "binomial or per-photon")
      ->capture_default_str();
}

struct MakeMaskOpts {
  std::string dims = default_dims;
  std::string out = "mask.pmask";
  int levels = 0;  // 0 = no quantization, decimal file
};

void add_make_mask_opts(CLI::App* cmd, MakeMaskOpts& opts) {
  cmd->add_option("--dims", opts.dims, "panel size as WIDTHxHEIGHT")
      ->capture_default_str();
  cmd->add_option("--out", opts.out, "output mask path")->capture_default_str();
  cmd->add_option("--levels", opts.levels,
                  "quantize to this many phase levels and store level indices");
}

void write_mask(const PhaseMask& mask, const MakeMaskOpts& opts,
                std::ostream& out) {
  if (opts.levels != 0) {
    save_mask_levels(quantize(mask, opts.levels), opts.out, opts.levels);
  } else {
    save_mask(mask, opts.out);
  }
  out << "wrote " << opts.out << " (" << mask.width() << "x" << mask.height()
      << ")\n";
}

std::string verdict_line(const OracleVerdict& v) {
  return "VERDICT " + to_string(v.verdict) +
         " statistic=" + format_double(v.statistic) +
         " threshold=" + format_double(v.threshold);
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string_view sv(text);
  double scale = 1.0;
  if (sv.size() >= 2 && (sv.substr(sv.size() - 2) == "pi")) {
    scale = two_pi / 2;
    sv.remove_suffix(2);
    if (sv.empty()) return scale;
    if (sv == "-") return -scale;
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
  if (ec != std::errc{} || ptr != sv.data() + sv.size())
    throw UsageError("bad angle '" + text + "' (want radians or <k>pi)");
  return v * scale;
}

PanelDims parse_dims(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= text.size())
    throw UsageError("bad dimensions '" + text + "' (want WIDTHxHEIGHT)");
  try {
    PanelDims dims{static_cast<int>(io::parse_int(text.substr(0, x), "dims")),
                   static_cast<int>(io::parse_int(text.substr(x + 1), "dims"))};
    if (dims.width < 1 || dims.height < 1)
      throw UsageError("dimensions must be positive in '" + text + "'");
    return dims;
  } catch (const IoError&) {
    throw UsageError("bad dimensions '" + text + "' (want WIDTHxHEIGHT)");
  }
}

CellSpec parse_cells(const std::string& text) {
  try {
    const auto x = text.find('x');
    if (x == std::string::npos) {
      const int side = static_cast<int>(io::parse_int(text, "cells"));
      if (side < 1) throw UsageError("cell size must be positive");
      return {side, side};
    }
    CellSpec cells{
        static_cast<int>(io::parse_int(text.substr(0, x), "cells")),
        static_cast<int>(io::parse_int(text.substr(x + 1), "cells"))};
    if (cells.width < 1 || cells.height < 1)
      throw UsageError("cell size must be positive");
    return cells;
  } catch (const IoError&) {
    throw UsageError("bad cell spec '" + text + "' (want N or WxH)");
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"DQC1 trace estimation on a virtual phase panel"};
  app.require_subcommand(1);
  int threads_flag = 0;
  app.add_option("--threads", threads_flag,
                 "worker threads (default: DQC1_THREADS or 1)");

  // ---- make-mask ---------------------------------------------------------
  auto* make_mask = app.add_subcommand("make-mask", "construct a phase mask");
  make_mask->require_subcommand(1);

  auto* mk_const = make_mask->add_subcommand("constant", "one phase everywhere");
  MakeMaskOpts const_opts;
  std::string const_phase = "0";
  mk_const->add_option("--phase", const_phase, "phase (radians or <k>pi)")
      ->capture_default_str();
  add_make_mask_opts(mk_const, const_opts);
  mk_const->callback([&] {
    write_mask(make_constant(parse_dims(const_opts.dims), parse_angle(const_phase)),
               const_opts, out);
  });

  auto* mk_half = make_mask->add_subcommand("half-split", "two horizontal bands");
  MakeMaskOpts half_opts;
  std::string phi_upper, phi_lower;
  mk_half->add_option("--phi-upper", phi_upper, "upper-half phase")->required();
  mk_half->add_option("--phi-lower", phi_lower, "lower-half phase")->required();
  add_make_mask_opts(mk_half, half_opts);
  mk_half->callback([&] {
    write_mask(make_half_split(parse_dims(half_opts.dims), parse_angle(phi_upper),
                               parse_angle(phi_lower)),
               half_opts, out);
  });

  auto* mk_bal = make_mask->add_subcommand(
      "random-balanced", "half the cells 0, half pi, shuffled by seed");
  MakeMaskOpts bal_opts;
  std::string bal_cells = "1";
  std::uint64_t bal_seed = 0;
  mk_bal->add_option("--cells", bal_cells, "cell size (N or WxH pixels)")
      ->capture_default_str();
  mk_bal->add_option("--seed", bal_seed, "shuffle seed")->required();
  add_make_mask_opts(mk_bal, bal_opts);
  mk_bal->callback([&] {
    write_mask(make_random_balanced(parse_dims(bal_opts.dims),
                                    parse_cells(bal_cells), bal_seed),
               bal_opts, out);
  });

  auto* mk_ramp =
      make_mask->add_subcommand("linear-ramp", "phase linear in the row index");
  MakeMaskOpts ramp_opts;
  std::string phi_start, phi_end, ramp_form = "span";
  mk_ramp->add_option("--phi-start", phi_start, "phase at the top row")->required();
  mk_ramp->add_option("--phi-end", phi_end, "phase the ramp runs to")->required();
  mk_ramp->add_option("--form", ramp_form,
                      "span (start..end) or additive (start + f*end)")
      ->capture_default_str();
  add_make_mask_opts(mk_ramp, ramp_opts);
  mk_ramp->callback([&] {
    RampForm form;
    if (ramp_form == "span")
      form = RampForm::Span;
    else if (ramp_form == "additive")
      form = RampForm::AdditiveEnd;
    else
      throw UsageError("unknown ramp form '" + ramp_form + "'");
    write_mask(make_linear_ramp(parse_dims(ramp_opts.dims), parse_angle(phi_start),
                                parse_angle(phi_end), form),
               ramp_opts, out);
  });

  // ---- trace -------------------------------------------------------------
  auto* trace = app.add_subcommand("trace", "estimate the normalized trace");
  std::string trace_mask, trace_profile, trace_counts;
  std::string trace_report = "report.json";
  int trace_levels = 0;
  MeasureOpts trace_meas;
  trace->add_option("--mask", trace_mask, "PMASK1 input")->required();
  trace->add_option("--profile", trace_profile, "IPROF1 beam profile (default flat)");
  trace->add_option("--counts", trace_counts,
                    "CGRID1 counts; beam profile when --profile is absent, "
                    "Poisson term of the systematics");
  trace->add_option("--levels", trace_levels,
                    "phase levels for the systematic error (default 256 when "
                    "--counts is given, else off)");
  trace->add_option("--report", trace_report, "report path")->capture_default_str();
  add_measure_opts(trace, trace_meas, 0);
  trace->callback([&] {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.command = "trace";
    for (int i = 0; i < argc; ++i) report.argv.emplace_back(argv[i]);
    report.started_utc = utc_timestamp();

    const PhaseMask mask = load_mask(trace_mask);
    report.mask_input = InputDigest{trace_mask, fnv1a64_file_digest(trace_mask)};
    report.panel = mask.dims();

    std::optional<CountsGrid> counts;
    if (!trace_counts.empty()) {
      counts = load_counts(trace_counts);
      report.counts_input =
          InputDigest{trace_counts, fnv1a64_file_digest(trace_counts)};
    }

    IntensityProfile profile = flat(mask.dims());
    if (!trace_profile.empty()) {
      ProfileLoadStats stats;
      profile = load_profile(trace_profile, &stats);
      if (stats.renormalized)
        err << "warning: profile sum was " << format_double(stats.input_sum)
            << ", renormalized to 1\n";
      report.profile_input =
          InputDigest{trace_profile, fnv1a64_file_digest(trace_profile)};
    } else if (counts) {
      profile = from_counts(*counts, mask.dims());
      report.defaults_applied.push_back("profile=from-counts");
    } else {
      report.defaults_applied.push_back("profile=flat");
    }
    if (trace->count("--p") == 0) report.defaults_applied.push_back("p=0.08");

    const int threads = resolve_threads(threads_flag);
    const DephasingParam p(trace_meas.p);
    report.dephasing_p = p.value();
    report.exact_flat_trace = exact_normalized_trace(mask, threads);
    report.analytic = analytic_trace(mask, profile, p, threads);

    int levels = trace_levels;
    if (levels == 0 && counts) levels = default_levels;
    if (levels != 0) {
      report.phase_levels = levels;
      const SystematicError sys = propagate_systematics(
          mask, profile, p, levels, counts ? &*counts : nullptr);
      report.analytic.sys_err_re = sys.re;
      report.analytic.sys_err_im = sys.im;
      if (!sys.poisson_term_included)
        err << "warning: no counts grid, Poisson error term omitted\n";
    }

    if (const auto config = trace_meas.config()) {
      report.monte_carlo = monte_carlo_trace(mask, profile, p, *config, threads);
      report.monte_carlo_seed = config->seed;
      report.monte_carlo_mode = trace_meas.mode;
    }

    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  t0)
            .count();
    io::write_text_file(trace_report, to_json(report).dump(2) + "\n");

    out << "panel " << report.panel.width << "x" << report.panel.height
        << ", p = " << format_double(p.value()) << "\n";
    out << "exact flat-beam trace: " << format_double(report.exact_flat_trace.real())
        << " " << format_double(report.exact_flat_trace.imag()) << "\n";
    out << "analytic: " << format_double(report.analytic.re) << " "
        << format_double(report.analytic.im);
    if (levels != 0)
      out << " (sys err " << format_double(report.analytic.sys_err_re) << " "
          << format_double(report.analytic.sys_err_im) << ")";
    out << "\n";
    if (report.monte_carlo) {
      out << "monte carlo: " << format_double(report.monte_carlo->re) << " +- "
          << format_double(report.monte_carlo->stat_err_re) << ", "
          << format_double(report.monte_carlo->im) << " +- "
          << format_double(report.monte_carlo->stat_err_im) << " ("
          << report.monte_carlo->photons_used << " photons, seed "
          << trace_meas.seed << ")\n";
    }
    out << "report written to " << trace_report << "\n";
  });

  // ---- dj ----------------------------------------------------------------
  auto* dj = app.add_subcommand("dj", "constant-vs-balanced oracle test");
  std::string dj_mask, dj_constant, dj_cells, dj_profile;
  std::string dj_dims = default_dims;
  std::uint64_t dj_mask_seed = 0;
  double dj_threshold = -1.0;  // <0 = default (1-2p)/2
  MeasureOpts dj_meas;
  dj->add_option("--mask", dj_mask, "PMASK1 oracle mask");
  dj->add_option("--constant", dj_constant,
                 "generate a constant oracle with this phase");
  dj->add_option("--balanced-cells", dj_cells,
                 "generate a random balanced oracle with this cell size");
  dj->add_option("--mask-seed", dj_mask_seed, "seed for --balanced-cells");
  dj->add_option("--dims", dj_dims, "panel size for generated oracles")
      ->capture_default_str();
  dj->add_option("--profile", dj_profile, "IPROF1 beam profile (default flat)");
  dj->add_option("--threshold", dj_threshold,
                 "decision threshold (default (1-2p)/2)");
  add_measure_opts(dj, dj_meas, 0);
  dj->callback([&] {
    const int sources = (dj_mask.empty() ? 0 : 1) + (dj_constant.empty() ? 0 : 1) +
                        (dj_cells.empty() ? 0 : 1);
    if (sources != 1)
      throw UsageError(
          "give exactly one of --mask, --constant, --balanced-cells");

    std::optional<PhaseMask> mask;
    if (!dj_mask.empty())
      mask = load_mask(dj_mask);
    else if (!dj_constant.empty())
      mask = make_constant(parse_dims(dj_dims), parse_angle(dj_constant));
    else
      mask = make_random_balanced(parse_dims(dj_dims), parse_cells(dj_cells),
                                  dj_mask_seed);

    const IntensityProfile profile = dj_profile.empty()
                                         ? flat(mask->dims())
                                         : load_profile(dj_profile);
    const DephasingParam p(dj_meas.p);
    const double threshold =
        dj_threshold < 0.0 ? default_dj_threshold(p) : dj_threshold;
    const OracleVerdict v = run_dj(*mask, profile, p, dj_meas.config(), threshold,
                                   resolve_threads(threads_flag));
    out << verdict_line(v) << "\n";
  });

  // ---- sweep -------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "balanced-oracle statistics across modulation cell sizes");
  std::string sweep_cells_text = "1,5,10";
  std::string sweep_dims = default_dims;
  std::string sweep_profile;
  std::string sweep_out = "sweep.csv";
  int sweep_trials = 0;
  double sweep_threshold = -1.0;
  MeasureOpts sweep_meas;
  sweep->add_option("--cells", sweep_cells_text, "comma list of square cell sizes")
      ->capture_default_str();
  sweep->add_option("--trials", sweep_trials, "random oracles per cell size")
      ->required();
  sweep->add_option("--dims", sweep_dims, "panel size")->capture_default_str();
  sweep->add_option("--profile", sweep_profile, "IPROF1 beam profile (default flat)");
  sweep->add_option("--threshold", sweep_threshold,
                    "decision threshold (default (1-2p)/2)");
  sweep->add_option("--out", sweep_out, "CSV output path")->capture_default_str();
  add_measure_opts(sweep, sweep_meas, 100000);
  sweep->callback([&] {
    std::vector<int> cells;
    for (const auto tok : io::tokenize_csv(sweep_cells_text))
      cells.push_back(static_cast<int>(io::parse_int(tok, "cells")));
    if (cells.empty()) throw UsageError("empty --cells list");

    const IntensityProfile profile =
        sweep_profile.empty() ? flat(parse_dims(sweep_dims))
                              : load_profile(sweep_profile);
    const DephasingParam p(sweep_meas.p);
    const double threshold =
        sweep_threshold < 0.0 ? default_dj_threshold(p) : sweep_threshold;
    const SweepResult result = resolution_sweep(
        cells, sweep_trials, profile, p, sweep_meas.config(), threshold,
        sweep_meas.seed, resolve_threads(threads_flag));

    std::string csv = "cell_size,trial,seed,statistic,stderr,verdict\n";
    for (const auto& row : result.rows) {
      csv += std::to_string(row.cell_size) + "," + std::to_string(row.trial) +
             "," + std::to_string(row.seed) + ",";
      io::append_double(csv, row.statistic);
      csv += ",";
      io::append_double(csv, row.stat_err);
      csv += "," + to_string(row.verdict) + "\n";
    }
    io::write_text_file(sweep_out, csv);

    for (const auto& s : result.summaries)
      out << "cells " << s.cell_size << "x" << s.cell_size << ": mean "
          << format_double(s.mean_statistic) << ", stddev "
          << format_double(s.stddev_statistic) << ", misclassified "
          << s.misclassified << "/" << s.trials << "\n";
    out << "wrote " << sweep_out << "\n";
  });

  // ---- ingest-beam -------------------------------------------------------
  auto* ingest = app.add_subcommand("ingest-beam",
                                    "turn a counts grid into a beam profile");
  std::string ingest_counts, ingest_dims, ingest_out = "beam.iprof";
  ingest->add_option("--counts", ingest_counts, "CGRID1 input")->required();
  ingest->add_option("--dims", ingest_dims,
                     "expected panel size (default: derived from the grid)");
  ingest->add_option("--out", ingest_out, "IPROF1 output path")
      ->capture_default_str();
  ingest->callback([&] {
    const CountsGrid grid = load_counts(ingest_counts);
    const PanelDims dims =
        ingest_dims.empty() ? grid.panel_dims() : parse_dims(ingest_dims);
    const IntensityProfile profile = from_counts(grid, dims);
    save_profile(profile, ingest_out);
    const double residual = compensated_sum(profile.weights()) - 1.0;
    out << "wrote " << ingest_out << " (" << dims.width << "x" << dims.height
        << "), unit-sum residual " << format_double(residual) << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimsError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace dqc1::cli
