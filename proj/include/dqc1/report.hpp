#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dqc1/dqc1.hpp"
#include "dqc1/measurement.hpp"

namespace dqc1 {

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits. Used to pin
/// report inputs; not a cryptographic hash.
std::string fnv1a64_file_digest(const std::filesystem::path& path);

struct InputDigest {
  std::string path;
  std::string fnv1a64;
};

/// Everything a trace run wants to remember. Serializes to the JSON layout
/// published in schema/run_report.schema.json; of the serialized fields only
/// the `timing` object varies between identical invocations.
struct RunReport {
  std::string command;
  std::vector<std::string> argv;
  std::optional<InputDigest> mask_input;
  std::optional<InputDigest> profile_input;
  std::optional<InputDigest> counts_input;
  PanelDims panel;
  double dephasing_p = 0.0;
  std::optional<int> phase_levels;
  std::vector<std::string> defaults_applied;
  std::complex<double> exact_flat_trace;
  TraceEstimate analytic;
  std::optional<TraceEstimate> monte_carlo;
  std::optional<std::uint64_t> monte_carlo_seed;
  std::optional<std::string> monte_carlo_mode;
  std::string started_utc;
  double duration_ms = 0.0;
};

nlohmann::ordered_json to_json(const RunReport& report);

}  // namespace dqc1
