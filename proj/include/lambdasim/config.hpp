#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lambdasim/fwm.hpp"
#include "lambdasim/scenarios.hpp"

namespace lambdasim {

struct DelayScanSpec {
  double from_ns = 0.0;
  double to_ns = 0.0;
  double step_ns = 200.0;

  std::vector<double> delays() const;
  bool operator==(const DelayScanSpec&) const = default;
};

/// Fully resolved run description. parse_config() fills every omitted
/// field with its default and rejects unknown keys, so a RunConfig (and
/// its echo in the run manifest) is always complete.
struct RunConfig {
  enum class ScenarioKind { fstirap, cpr, custom };
  enum class OutputFormat { csv, json };

  ScenarioKind scenario = ScenarioKind::fstirap;
  OutputFormat out_format = OutputFormat::csv;
  bool emit_raw_rho = false;
  bool emit_detector_trace = false;
  std::uint64_t seed = 0;  // echoed for noise-injection test runs

  FstirapParams fstirap{};
  CprParams cpr{};
  std::vector<double> stokes_peaks{kDefaultStokesPeaks.begin(), kDefaultStokesPeaks.end()};
  std::optional<DelayScanSpec> delay_scan;            // default derived from the scenario
  std::optional<Scenario> custom;                     // required when scenario == custom
  std::optional<std::array<double, 2>> fit_window_ns; // default derived from the scenario

  FwmMedium medium{};
  double field_per_rabi = 1.0;
  double detector_window_ns = 200.0;

  bool operator==(const RunConfig&) const = default;
};

/// Parses the documented flat-key JSON document. An empty (or
/// whitespace-only) document yields all defaults. Errors carry the
/// offending key or the parse position.
RunConfig parse_config(const std::string& text);

/// Serializes with every field explicit; parse_config(serialize_config(c))
/// reproduces c for all valid configs.
std::string serialize_config(const RunConfig& config);

RunConfig load_config_file(const std::string& path);

}  // namespace lambdasim
