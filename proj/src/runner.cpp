#include "lambdasim/runner.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lambdasim {

namespace {

using nlohmann::json;

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

Table trajectory_table(const Trajectory& traj) {
  Table t;
  t.columns = {"t_ns", "p1", "p2", "p3", "abs_rho13"};
  t.rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i)
    t.rows.push_back({traj.times_ns[i], traj.p1[i], traj.p2[i], traj.p3[i], traj.abs_rho13[i]});
  return t;
}

Table rho_table(const Trajectory& traj) {
  Table t;
  t.columns = {"t_ns",     "re_rho11", "re_rho22", "re_rho33", "re_rho12",
               "im_rho12", "re_rho13", "im_rho13", "re_rho23", "im_rho23"};
  t.rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const Matrix3c& m = traj.states[i].matrix();
    t.rows.push_back({traj.times_ns[i], m(0, 0).real(), m(1, 1).real(), m(2, 2).real(),
                      m(0, 1).real(), m(0, 1).imag(), m(0, 2).real(), m(0, 2).imag(),
                      m(1, 2).real(), m(1, 2).imag()});
  }
  return t;
}

Table signal_table(const SignalTrace& signal, const SignalTrace& resolved) {
  Table t;
  t.columns = {"t_ns", "signal", "signal_resolved"};
  t.rows.reserve(signal.size());
  for (std::size_t i = 0; i < signal.size(); ++i)
    t.rows.push_back({signal.times_ns[i], signal.amplitude[i], resolved.amplitude[i]});
  return t;
}

std::string table_extension(RunConfig::OutputFormat format) {
  return format == RunConfig::OutputFormat::csv ? ".csv" : ".json";
}

struct RunContext {
  const RunConfig& config;
  const std::filesystem::path& out_dir;
  std::vector<std::string> files;

  void emit(const Table& table, const std::string& basename) {
    const std::string name = basename + table_extension(config.out_format);
    write_table(table, out_dir / name, config.out_format);
    files.push_back(name);
  }

  void emit_json(const json& j, const std::string& name) {
    write_text(out_dir / name, j.dump(2) + "\n");
    files.push_back(name);
  }
};

json fit_to_json(const ExpFit& fit, double from_ns, double to_ns) {
  return json{{"amplitude", fit.amplitude},
              {"tau_ns", fit.time_constant_ns},
              {"rms_log_residual", fit.rms_log_residual},
              {"window_ns", json::array({from_ns, to_ns})}};
}

void run_fstirap(RunContext& ctx) {
  const RunConfig& config = ctx.config;
  const Scenario scenario = build_fractional_stirap(config.fstirap);
  const Trajectory trajectory = evolve(scenario);
  ctx.emit(trajectory_table(trajectory), "trajectory");
  if (config.emit_raw_rho) ctx.emit(rho_table(trajectory), "rho");

  const double pulses_end = config.fstirap.cutoff_ns + config.fstirap.ramp_ns;
  if (config.emit_detector_trace) {
    // Reference trace with the probe parked at the turn-off moment.
    SignalTrace signal = signal_from_trajectory(trajectory, scenario.probe, config.medium,
                                                pulses_end, config.field_per_rabi);
    SignalTrace resolved = apply_detector_resolution(signal, config.detector_window_ns);
    ctx.emit(signal_table(signal, resolved), "signal");
  }

  DelayScanSpec scan{config.fstirap.pump_center_ns - 10000.0, pulses_end + 50000.0, 200.0};
  if (config.delay_scan) scan = *config.delay_scan;
  const std::vector<double> delays = scan.delays();
  SweepOptions options;
  options.detector_window_ns = config.detector_window_ns;
  options.field_per_rabi = config.field_per_rabi;
  const SweepResult result =
      probe_delay_scan(trajectory, scenario.probe, delays, config.medium, options);

  Table scan_table;
  scan_table.columns = {"delay_ns", "peak_signal"};
  SignalTrace scan_trace;
  for (const SweepPoint& point : result.points) {
    scan_table.rows.push_back({point.parameter, point.peak_signal});
    scan_trace.times_ns.push_back(point.parameter);
    scan_trace.amplitude.push_back(point.peak_signal);
  }
  ctx.emit(scan_table, "delay_scan");

  std::array<double, 2> window{pulses_end + 2000.0, scan.to_ns};
  if (config.fit_window_ns) window = *config.fit_window_ns;
  const ExpFit fit = fit_exponential_decay(scan_trace, window[0], window[1]);
  ctx.emit_json(fit_to_json(fit, window[0], window[1]), "fit.json");
}

void run_cpr(RunContext& ctx) {
  const RunConfig& config = ctx.config;
  SweepOptions options;
  options.detector_window_ns = config.detector_window_ns;
  options.field_per_rabi = config.field_per_rabi;
  const SweepResult sweep =
      run_stokes_sweep(config.stokes_peaks, config.cpr, config.medium, options);

  Table summary;
  summary.columns = {"stokes_peak_rad_per_ns", "max_abs_rho13", "t_max_ns", "n_local_maxima",
                     "peak_signal"};
  for (std::size_t i = 0; i < sweep.points.size(); ++i) {
    const SweepPoint& point = sweep.points[i];
    const Trajectory& traj = point.trajectory;

    Table trace = trajectory_table(traj);
    if (config.emit_detector_trace) {
      trace.columns.push_back("signal");
      trace.columns.push_back("signal_resolved");
      for (std::size_t r = 0; r < trace.rows.size(); ++r) {
        trace.rows[r].push_back(point.signal.amplitude[r]);
        trace.rows[r].push_back(point.resolved.amplitude[r]);
      }
    }
    ctx.emit(trace, "cpr_trace_" + std::to_string(i + 1));

    const auto max_it = std::max_element(traj.abs_rho13.begin(), traj.abs_rho13.end());
    SignalTrace rho_trace{traj.times_ns, traj.abs_rho13};
    const SignalTrace smooth = apply_detector_resolution(rho_trace, kPeakSmoothingWindowNs);
    summary.rows.push_back(
        {point.parameter, *max_it,
         traj.times_ns[static_cast<std::size_t>(max_it - traj.abs_rho13.begin())],
         static_cast<double>(count_local_maxima(smooth.amplitude, kPeakMinProminence)),
         point.peak_signal});
  }
  ctx.emit(summary, "sweep_summary");
}

void run_custom(RunContext& ctx) {
  const RunConfig& config = ctx.config;
  if (!config.custom) throw std::invalid_argument("run: custom scenario missing");
  const Trajectory trajectory = evolve(*config.custom);
  ctx.emit(trajectory_table(trajectory), "trajectory");
  if (config.emit_raw_rho) ctx.emit(rho_table(trajectory), "rho");
  if (config.emit_detector_trace) {
    SignalTrace signal = signal_from_trajectory(trajectory, config.custom->probe, config.medium,
                                                0.0, config.field_per_rabi);
    SignalTrace resolved = apply_detector_resolution(signal, config.detector_window_ns);
    ctx.emit(signal_table(signal, resolved), "signal");
  }
}

}  // namespace

void write_table(const Table& table, const std::filesystem::path& path,
                 RunConfig::OutputFormat format) {
  std::ostringstream out;
  if (format == RunConfig::OutputFormat::csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c) out << ',';
      out << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        out << format_double(row[c]);
      }
      out << '\n';
    }
  } else {
    json j = json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      json column = json::array();
      for (const auto& row : table.rows) column.push_back(row[c]);
      j[table.columns[c]] = std::move(column);
    }
    out << j.dump(2) << '\n';
  }
  write_text(path, out.str());
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path.string());
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV: " + path.string());
  std::istringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) table.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row_stream(line);
    std::vector<double> row;
    while (std::getline(row_stream, cell, ',')) {
      std::size_t pos = 0;
      const double value = std::stod(cell, &pos);
      if (pos != cell.size())
        throw std::runtime_error("bad numeric cell \"" + cell + "\" in " + path.string());
      row.push_back(value);
    }
    if (row.size() != table.columns.size())
      throw std::runtime_error("ragged CSV row in " + path.string());
    table.rows.push_back(std::move(row));
  }
  return table;
}

RunOutputs run(const RunConfig& config, const std::filesystem::path& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  std::filesystem::create_directories(out_dir);

  RunContext ctx{config, out_dir, {}};
  switch (config.scenario) {
    case RunConfig::ScenarioKind::fstirap: run_fstirap(ctx); break;
    case RunConfig::ScenarioKind::cpr: run_cpr(ctx); break;
    case RunConfig::ScenarioKind::custom: run_custom(ctx); break;
  }

  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json manifest{{"tool", "simulate"},
                {"version", kVersion},
                {"config", json::parse(serialize_config(config))},
                {"files", ctx.files},
                {"threads", max_sweep_threads()},
                {"wall_ms", wall_ms}};
  write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

  RunOutputs outputs;
  outputs.files = std::move(ctx.files);
  outputs.files.push_back("manifest.json");
  outputs.wall_ms = wall_ms;
  return outputs;
}

}  // namespace lambdasim
