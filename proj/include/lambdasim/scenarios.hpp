#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambdasim/evolution.hpp"
#include "lambdasim/fwm.hpp"
#include "lambdasim/model.hpp"
#include "lambdasim/pulses.hpp"

namespace lambdasim {

/// A complete experiment description: system, the three field envelopes,
/// integration grid and a diagonal initial state.
struct Scenario {
  std::string label;
  LambdaSystem system;
  PulseEnvelope pump = PulseEnvelope::constant(0.0);
  PulseEnvelope stokes = PulseEnvelope::constant(0.0);
  PulseEnvelope probe = PulseEnvelope::constant(0.0);
  TimeGrid grid;
  std::array<double, 3> initial_populations{1.0, 0.0, 0.0};

  /// Mixing angle held after a shared pump/Stokes cutoff, when the
  /// builder froze one (fractional STIRAP); the envelopes themselves
  /// vanish after the ramp, so the frozen value is carried here.
  std::optional<double> frozen_theta_rad;

  void validate() const;
  DensityMatrix initial_state() const;

  bool operator==(const Scenario&) const = default;
};

/// Fractional-STIRAP scenario parameters. Peaks are Rabi amplitudes in
/// rad/ns; pulse durations are given as intensity FWHMs and converted to
/// Rabi FWHMs internally. The shared cutoff (default: at the pump
/// center) freezes the pump/Stokes ratio through turn-off. Pulse timing
/// is a reconstruction: the experiment's absolute timing is unpublished.
struct FstirapParams {
  double peak_pump = 0.09;
  double peak_stokes = 0.12;
  double intensity_fwhm_pump_ns = 2000.0;
  double intensity_fwhm_stokes_ns = 24000.0;
  double pump_center_ns = 40000.0;
  double stokes_advance_ns = 11000.0;
  double cutoff_ns = 40000.0;
  double ramp_ns = 500.0;
  double probe_peak = 0.08;
  double probe_intensity_fwhm_ns = 500.0;
  LambdaSystem system{0.0, 0.0, 0.036, 0.5, 5e-5};  // gamma_ground = 1/(20 us)
  double tail_ns = 60000.0;
  double dt_ns = 0.5;
  int sample_every = 400;

  bool operator==(const FstirapParams&) const = default;
};

/// Coherent-population-return scenario parameters: continuous pump,
/// Gaussian Stokes (FWHM of the Rabi amplitude), continuous probe,
/// initial state |3>.
struct CprParams {
  double pump_level = 0.028;
  double stokes_center_ns = 54900.0;
  double stokes_fwhm_rabi_ns = 15300.0;
  double probe_level = 0.006;
  LambdaSystem system{0.0, 0.0, 0.036, 0.5, 5e-5};
  double t_end_ns = 110000.0;
  double dt_ns = 0.5;
  int sample_every = 400;

  bool operator==(const CprParams&) const = default;
};

/// Grid starts at 0 and spans the pulse support plus tail_ns; initial
/// state |1>; probe is a Gaussian centered at t=0 that probe delays
/// shift along the trajectory.
Scenario build_fractional_stirap(const FstirapParams& params = {});

/// peak_stokes is the Stokes Rabi amplitude at the pulse center.
Scenario build_cpr(double peak_stokes, const CprParams& params = {});

/// Sweep execution: sweep points are independent and may run on OpenMP
/// threads; results are ordered by parameter value either way and are
/// bit-identical between the two policies.
enum class ExecutionPolicy { serial, parallel };

/// Number of threads a parallel sweep will use: OpenMP's limit, capped
/// by the SIMULATE_THREADS environment variable when set. Returns 1
/// when built without OpenMP.
int max_sweep_threads();

struct SweepOptions {
  ExecutionPolicy policy = ExecutionPolicy::parallel;
  double detector_window_ns = 200.0;
  double field_per_rabi = 1.0;
  bool keep_traces = true;  // retain per-point trajectories and signal traces
};

struct SweepPoint {
  double parameter = 0.0;
  double peak_signal = 0.0;  // max detector-resolved amplitude
  Trajectory trajectory;     // filled when keep_traces is set (Stokes sweep)
  SignalTrace signal;
  SignalTrace resolved;
};

struct SweepResult {
  std::string parameter_name;
  std::vector<SweepPoint> points;
};

/// Probe-delay scan over an already-computed trajectory: the probe does
/// not act back on the dynamics, so one evolution serves all delays.
/// Summary per delay: peak detector-resolved signal.
SweepResult probe_delay_scan(const Trajectory& trajectory, const PulseEnvelope& probe,
                             std::span<const double> delays_ns, const FwmMedium& medium,
                             const SweepOptions& options = {});

/// Evolves the scenario once, then scans. Delays must be strictly
/// increasing and non-empty.
SweepResult run_probe_delay_scan(const Scenario& scenario, std::span<const double> delays_ns,
                                 const FwmMedium& medium, const SweepOptions& options = {});

/// One CPR evolution per Stokes peak; peaks must be strictly increasing
/// and positive. Defaults to the four-peak set {0.023, 0.033, 0.05,
/// 0.075} rad/ns when peaks is empty.
SweepResult run_stokes_sweep(std::span<const double> peaks, const CprParams& params = {},
                             const FwmMedium& medium = {}, const SweepOptions& options = {});

inline constexpr std::array<double, 4> kDefaultStokesPeaks{0.023, 0.033, 0.05, 0.075};

struct ExpFit {
  double amplitude = 0.0;         // fitted value at window_start
  double time_constant_ns = 0.0;  // negative means growth
  double rms_log_residual = 0.0;
};

/// Least-squares line through (t, log amplitude) over the window.
/// Requires at least 10 samples in the window, all positive; throws on
/// non-positive amplitudes or degenerate (constant) data.
ExpFit fit_exponential_decay(const SignalTrace& trace, double window_start_ns,
                             double window_end_ns);

/// Local maxima with topographic prominence of at least min_prominence.
int count_local_maxima(const std::vector<double>& values, double min_prominence);

/// Smoothing window and prominence used when classifying sweep traces.
inline constexpr double kPeakSmoothingWindowNs = 1000.0;
inline constexpr double kPeakMinProminence = 0.002;

}  // namespace lambdasim
