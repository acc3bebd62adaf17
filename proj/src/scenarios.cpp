#include "lambdasim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lambdasim {

void Scenario::validate() const {
  system.validate();
  grid.validate();
  double sum = 0.0;
  for (double p : initial_populations) {
    if (p < 0.0)
      throw std::invalid_argument("Scenario: initial populations must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("Scenario: initial populations must sum to 1, got " +
                                std::to_string(sum));
}

DensityMatrix Scenario::initial_state() const {
  return DensityMatrix::diagonal(initial_populations[0], initial_populations[1],
                                 initial_populations[2]);
}

Scenario build_fractional_stirap(const FstirapParams& params) {
  const double fwhm_pump = intensity_fwhm_to_rabi_fwhm(params.intensity_fwhm_pump_ns);
  const double fwhm_stokes = intensity_fwhm_to_rabi_fwhm(params.intensity_fwhm_stokes_ns);
  StirapPair pair = fractional_stirap_pair(
      params.peak_pump, params.peak_stokes, fwhm_pump, fwhm_stokes, params.pump_center_ns,
      params.stokes_advance_ns, params.cutoff_ns, params.ramp_ns);

  Scenario scenario;
  scenario.label = "fstirap";
  scenario.system = params.system;
  scenario.pump = std::move(pair.pump);
  scenario.stokes = std::move(pair.stokes);
  scenario.probe = PulseEnvelope::gaussian(
      params.probe_peak, 0.0, intensity_fwhm_to_rabi_fwhm(params.probe_intensity_fwhm_ns));
  scenario.grid = TimeGrid{0.0, params.cutoff_ns + params.ramp_ns + params.tail_ns,
                           params.dt_ns, params.sample_every};
  scenario.initial_populations = {1.0, 0.0, 0.0};
  scenario.frozen_theta_rad = std::atan(pair.frozen_ratio);
  scenario.validate();
  return scenario;
}

Scenario build_cpr(double peak_stokes, const CprParams& params) {
  if (!(peak_stokes > 0.0))
    throw std::invalid_argument("build_cpr: peak_stokes must be > 0, got " +
                                std::to_string(peak_stokes));
  Scenario scenario;
  scenario.label = "cpr";
  scenario.system = params.system;
  scenario.pump = PulseEnvelope::constant(params.pump_level);
  scenario.stokes =
      PulseEnvelope::gaussian(peak_stokes, params.stokes_center_ns, params.stokes_fwhm_rabi_ns);
  scenario.probe = PulseEnvelope::constant(params.probe_level);
  scenario.grid = TimeGrid{0.0, params.t_end_ns, params.dt_ns, params.sample_every};
  scenario.initial_populations = {0.0, 0.0, 1.0};
  scenario.validate();
  return scenario;
}

int max_sweep_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("SIMULATE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0 && cap < n) n = static_cast<int>(cap);
  }
  return n;
#else
  return 1;
#endif
}

namespace {

// Runs body(i) for i in [0, n) under the chosen policy. Each index
// writes only its own output slot, so parallel results are bit-identical
// to serial ones.
template <typename Body>
void for_each_point(std::size_t n, ExecutionPolicy policy, const Body& body) {
#ifdef _OPENMP
  if (policy == ExecutionPolicy::parallel && n > 1) {
    const int threads = max_sweep_threads();
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

double peak_amplitude(const SignalTrace& trace) {
  return *std::max_element(trace.amplitude.begin(), trace.amplitude.end());
}

}  // namespace

SweepResult probe_delay_scan(const Trajectory& trajectory, const PulseEnvelope& probe,
                             std::span<const double> delays_ns, const FwmMedium& medium,
                             const SweepOptions& options) {
  if (delays_ns.empty())
    throw std::invalid_argument("probe_delay_scan: empty delay list");
  for (std::size_t i = 1; i < delays_ns.size(); ++i)
    if (!(delays_ns[i] > delays_ns[i - 1]))
      throw std::invalid_argument("probe_delay_scan: delays must be strictly increasing");

  SweepResult result;
  result.parameter_name = "probe_delay_ns";
  result.points.resize(delays_ns.size());
  for_each_point(delays_ns.size(), options.policy, [&](std::size_t i) {
    SweepPoint& point = result.points[i];
    point.parameter = delays_ns[i];
    SignalTrace signal = signal_from_trajectory(trajectory, probe, medium, delays_ns[i],
                                                options.field_per_rabi);
    SignalTrace resolved = apply_detector_resolution(signal, options.detector_window_ns);
    point.peak_signal = peak_amplitude(resolved);
  });
  return result;
}

SweepResult run_probe_delay_scan(const Scenario& scenario, std::span<const double> delays_ns,
                                 const FwmMedium& medium, const SweepOptions& options) {
  const Trajectory trajectory = evolve(scenario);
  return probe_delay_scan(trajectory, scenario.probe, delays_ns, medium, options);
}

SweepResult run_stokes_sweep(std::span<const double> peaks, const CprParams& params,
                             const FwmMedium& medium, const SweepOptions& options) {
  std::vector<double> values(peaks.begin(), peaks.end());
  if (values.empty())
    values.assign(kDefaultStokesPeaks.begin(), kDefaultStokesPeaks.end());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0))
      throw std::invalid_argument("run_stokes_sweep: peaks must be positive");
    if (i > 0 && !(values[i] > values[i - 1]))
      throw std::invalid_argument("run_stokes_sweep: peaks must be strictly increasing");
  }

  SweepResult result;
  result.parameter_name = "stokes_peak_rad_per_ns";
  result.points.resize(values.size());
  for_each_point(values.size(), options.policy, [&](std::size_t i) {
    SweepPoint& point = result.points[i];
    point.parameter = values[i];
    Scenario scenario = build_cpr(values[i], params);
    Trajectory trajectory = evolve(scenario);
    SignalTrace signal = signal_from_trajectory(trajectory, scenario.probe, medium, 0.0,
                                                options.field_per_rabi);
    SignalTrace resolved = apply_detector_resolution(signal, options.detector_window_ns);
    point.peak_signal = peak_amplitude(resolved);
    if (options.keep_traces) {
      point.trajectory = std::move(trajectory);
      point.signal = std::move(signal);
      point.resolved = std::move(resolved);
    }
  });
  return result;
}

ExpFit fit_exponential_decay(const SignalTrace& trace, double window_start_ns,
                             double window_end_ns) {
  if (!(window_end_ns > window_start_ns))
    throw std::invalid_argument("fit_exponential_decay: empty window");

  std::vector<double> ts, logs;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double t = trace.times_ns[i];
    if (t < window_start_ns || t > window_end_ns) continue;
    const double a = trace.amplitude[i];
    if (!(a > 0.0))
      throw std::invalid_argument("fit_exponential_decay: non-positive amplitude " +
                                  std::to_string(a) + " at t=" + std::to_string(t) + " ns");
    ts.push_back(t);
    logs.push_back(std::log(a));
  }
  if (ts.size() < 10)
    throw std::invalid_argument("fit_exponential_decay: window holds " +
                                std::to_string(ts.size()) + " samples, need at least 10");

  const auto n = static_cast<double>(ts.size());
  double mean_t = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    mean_t += ts[i];
    mean_y += logs[i];
  }
  mean_t /= n;
  mean_y /= n;
  double s_tt = 0.0, s_ty = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double dt = ts[i] - mean_t;
    s_tt += dt * dt;
    s_ty += dt * (logs[i] - mean_y);
  }
  const double slope = s_ty / s_tt;
  if (slope == 0.0 || !std::isfinite(slope))
    throw std::invalid_argument("fit_exponential_decay: degenerate (constant) data");

  ExpFit fit;
  fit.time_constant_ns = -1.0 / slope;
  const double intercept = mean_y - slope * mean_t;
  fit.amplitude = std::exp(intercept + slope * window_start_ns);
  double ss = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double r = logs[i] - (intercept + slope * ts[i]);
    ss += r * r;
  }
  fit.rms_log_residual = std::sqrt(ss / n);
  return fit;
}

int count_local_maxima(const std::vector<double>& values, double min_prominence) {
  // Compress plateaus so equal runs count once.
  std::vector<double> v;
  v.reserve(values.size());
  for (double x : values)
    if (v.empty() || x != v.back()) v.push_back(x);
  const std::size_t n = v.size();
  if (n < 3) return 0;

  int count = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(v[i] > v[i - 1] && v[i] > v[i + 1])) continue;
    // Topographic prominence: lowest point on the way to higher ground,
    // or to the trace end when nothing higher exists on that side.
    double left_min = v[i];
    for (std::size_t j = i; j-- > 0;) {
      left_min = std::min(left_min, v[j]);
      if (v[j] > v[i]) break;
    }
    double right_min = v[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      right_min = std::min(right_min, v[j]);
      if (v[j] > v[i]) break;
    }
    const double prominence = v[i] - std::max(left_min, right_min);
    if (prominence >= min_prominence) ++count;
  }
  return count;
}

}  // namespace lambdasim
