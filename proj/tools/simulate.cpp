#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambdasim/config.hpp"
#include "lambdasim/runner.hpp"

namespace {

using lambdasim::RunConfig;

int execute(const RunConfig& config, const std::string& out_dir) {
  const lambdasim::RunOutputs outputs = lambdasim::run(config, out_dir);
  std::cout << "wrote " << outputs.files.size() << " files to " << out_dir << " in "
            << outputs.wall_ms << " ms\n";
  return 0;
}

// Finds a column by name, or falls back to the given index.
std::size_t pick_column(const lambdasim::Table& table, const std::string& name,
                        std::size_t fallback) {
  if (name.empty()) return fallback;
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    if (table.columns[c] == name) return c;
  throw std::invalid_argument("fit: no column named \"" + name + "\" in input");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-level Lambda-system coherence simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out";

  auto* cmd_run = app.add_subcommand("run", "Execute a JSON config");
  cmd_run->add_option("--config", config_path, "Path to the config file")->required();
  cmd_run->add_option("--out", out_dir, "Output directory");

  auto* cmd_fstirap =
      app.add_subcommand("fstirap", "Fractional-STIRAP scenario with flag overrides");
  lambdasim::FstirapParams fsp;
  bool emit_raw = false, emit_trace = false;
  cmd_fstirap->add_option("--out", out_dir, "Output directory");
  cmd_fstirap->add_option("--peak-pump", fsp.peak_pump, "Pump Rabi peak, rad/ns");
  cmd_fstirap->add_option("--peak-stokes", fsp.peak_stokes, "Stokes Rabi peak, rad/ns");
  cmd_fstirap->add_option("--pump-center-ns", fsp.pump_center_ns, "Pump pulse center, ns");
  cmd_fstirap->add_option("--cutoff-ns", fsp.cutoff_ns, "Shared turn-off time, ns");
  cmd_fstirap->add_option("--ramp-ns", fsp.ramp_ns, "Turn-off ramp duration, ns");
  cmd_fstirap->add_option("--gamma-ground", fsp.system.gamma_ground,
                          "Ground-state decoherence rate, 1/ns");
  cmd_fstirap->add_option("--tail-ns", fsp.tail_ns, "Post-pulse simulation tail, ns");
  cmd_fstirap->add_option("--dt-ns", fsp.dt_ns, "Integrator step, ns");
  cmd_fstirap->add_flag("--emit-raw-rho", emit_raw, "Also write the full density matrix");
  cmd_fstirap->add_flag("--emit-detector-trace", emit_trace,
                        "Also write the detector-resolved signal trace");

  auto* cmd_cpr = app.add_subcommand("cpr", "Coherent-population-return Stokes sweep");
  lambdasim::CprParams cpr_params;
  std::vector<double> stokes_peaks;
  cmd_cpr->add_option("--out", out_dir, "Output directory");
  cmd_cpr->add_option("--stokes-peaks", stokes_peaks,
                      "Comma-separated Stokes Rabi peaks, rad/ns")
      ->delimiter(',');
  cmd_cpr->add_option("--pump-level", cpr_params.pump_level, "Continuous pump Rabi level, rad/ns");
  cmd_cpr->add_option("--gamma-ground", cpr_params.system.gamma_ground,
                      "Ground-state decoherence rate, 1/ns");
  cmd_cpr->add_option("--t-end-ns", cpr_params.t_end_ns, "Simulation end time, ns");
  cmd_cpr->add_option("--dt-ns", cpr_params.dt_ns, "Integrator step, ns");
  cmd_cpr->add_flag("--emit-detector-trace", emit_trace,
                    "Add signal columns to the trace files");

  auto* cmd_fit = app.add_subcommand("fit", "Fit an exponential tail of an existing CSV");
  std::string fit_input, time_col, value_col;
  double from_ns = 0.0, to_ns = 0.0;
  cmd_fit->add_option("--input", fit_input, "CSV file with a header row")->required();
  cmd_fit->add_option("--from-ns", from_ns, "Window start, ns")->required();
  cmd_fit->add_option("--to-ns", to_ns, "Window end, ns")->required();
  cmd_fit->add_option("--time-col", time_col, "Time column name (default: first column)");
  cmd_fit->add_option("--value-col", value_col, "Value column name (default: last column)");

  auto* cmd_validate = app.add_subcommand("validate", "Parse and echo a config, run nothing");
  cmd_validate->add_option("--config", config_path, "Path to the config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_run->parsed()) {
      return execute(lambdasim::load_config_file(config_path), out_dir);
    }
    if (cmd_fstirap->parsed()) {
      RunConfig config;
      config.scenario = RunConfig::ScenarioKind::fstirap;
      config.fstirap = fsp;
      config.emit_raw_rho = emit_raw;
      config.emit_detector_trace = emit_trace;
      return execute(config, out_dir);
    }
    if (cmd_cpr->parsed()) {
      RunConfig config;
      config.scenario = RunConfig::ScenarioKind::cpr;
      config.cpr = cpr_params;
      config.emit_detector_trace = emit_trace;
      if (!stokes_peaks.empty()) config.stokes_peaks = stokes_peaks;
      return execute(config, out_dir);
    }
    if (cmd_fit->parsed()) {
      const lambdasim::Table table = lambdasim::read_csv(fit_input);
      if (table.columns.empty() || table.rows.empty())
        throw std::invalid_argument("fit: input has no data rows");
      const std::size_t tc = pick_column(table, time_col, 0);
      const std::size_t vc = pick_column(table, value_col, table.columns.size() - 1);
      lambdasim::SignalTrace trace;
      for (const auto& row : table.rows) {
        trace.times_ns.push_back(row[tc]);
        trace.amplitude.push_back(row[vc]);
      }
      const lambdasim::ExpFit fit = lambdasim::fit_exponential_decay(trace, from_ns, to_ns);
      nlohmann::json j{{"amplitude", fit.amplitude},
                       {"tau_ns", fit.time_constant_ns},
                       {"rms_log_residual", fit.rms_log_residual},
                       {"window_ns", nlohmann::json::array({from_ns, to_ns})}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (cmd_validate->parsed()) {
      const RunConfig config = lambdasim::load_config_file(config_path);
      std::cout << lambdasim::serialize_config(config);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
