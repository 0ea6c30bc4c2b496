#include "dqc1/report.hpp"

#include <fstream>

namespace dqc1 {

std::string fnv1a64_file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for digest");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
    if (!in) break;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return hex;
}

namespace {

using nlohmann::ordered_json;

ordered_json input_json(const std::optional<InputDigest>& in) {
  if (!in) return nullptr;
  return ordered_json{{"path", in->path}, {"fnv1a64", in->fnv1a64}};
}

ordered_json estimate_json(const TraceEstimate& est) {
  return ordered_json{{"re", est.re},
                      {"im", est.im},
                      {"stat_err_re", est.stat_err_re},
                      {"stat_err_im", est.stat_err_im},
                      {"sys_err_re", est.sys_err_re},
                      {"sys_err_im", est.sys_err_im},
                      {"photons_used", est.photons_used}};
}

}  // namespace

ordered_json to_json(const RunReport& report) {
  ordered_json j;
  j["schema"] = "dqc1-run-report-v1";
  j["command"] = report.command;
  j["argv"] = report.argv;
  j["inputs"] = ordered_json{{"mask", input_json(report.mask_input)},
                             {"profile", input_json(report.profile_input)},
                             {"counts", input_json(report.counts_input)}};
  j["panel"] =
      ordered_json{{"width", report.panel.width}, {"height", report.panel.height}};
  j["noise"] = ordered_json{
      {"dephasing_p", report.dephasing_p},
      {"phase_levels",
       report.phase_levels ? ordered_json(*report.phase_levels) : nullptr}};
  j["defaults_applied"] = report.defaults_applied;
  j["exact_flat_trace"] = ordered_json{{"re", report.exact_flat_trace.real()},
                                       {"im", report.exact_flat_trace.imag()}};
  j["analytic"] = estimate_json(report.analytic);
  if (report.monte_carlo) {
    ordered_json mc = estimate_json(*report.monte_carlo);
    mc["seed"] = report.monte_carlo_seed.value_or(0);
    mc["mode"] = report.monte_carlo_mode.value_or("binomial");
    j["monte_carlo"] = mc;
  } else {
    j["monte_carlo"] = nullptr;
  }
  // Volatile fields, excluded from the byte-identical-rerun guarantee.
  j["timing"] = ordered_json{{"started_utc", report.started_utc},
                             {"duration_ms", report.duration_ms}};
  return j;
}

}  // namespace dqc1
