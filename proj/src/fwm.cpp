#include "lambdasim/fwm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lambdasim {

namespace {

// CODATA 2018
constexpr double kHbar = 1.054571817e-34;       // J s
constexpr double kSpeedOfLight = 299792458.0;   // m/s
constexpr double kEpsilon0 = 8.8541878128e-12;  // F/m
constexpr double kPerCm3ToPerM3 = 1e6;

}  // namespace

void FwmMedium::validate() const {
  if (!(number_density_cm3 > 0.0))
    throw std::invalid_argument("FwmMedium: number_density must be > 0, got " +
                                std::to_string(number_density_cm3));
  if (delta_probe == 0.0)
    throw std::invalid_argument("FwmMedium: delta_probe must be nonzero");
  if (!(length_m > 0.0))
    throw std::invalid_argument("FwmMedium: length must be > 0, got " +
                                std::to_string(length_m));
}

double FwmMedium::prefactor_per_m() const {
  return M_PI * number_density_cm3 * kPerCm3ToPerM3 * omega_fwm * mu_13 * mu_23 /
         (kHbar * kSpeedOfLight * kEpsilon0 * delta_probe);
}

double fwm_field(double rho13_abs, double e_probe, const FwmMedium& medium) {
  medium.validate();
  if (!(rho13_abs >= 0.0 && rho13_abs <= 0.5 + 1e-9))
    throw std::invalid_argument("fwm_field: rho13_abs must lie in [0, 0.5], got " +
                                std::to_string(rho13_abs));
  if (!(e_probe >= 0.0))
    throw std::invalid_argument("fwm_field: e_probe must be >= 0, got " +
                                std::to_string(e_probe));
  return medium.prefactor_per_m() * rho13_abs * e_probe * medium.length_m;
}

SignalTrace signal_from_trajectory(const Trajectory& trajectory, const PulseEnvelope& probe,
                                   const FwmMedium& medium, double probe_delay_ns,
                                   double field_per_rabi) {
  if (trajectory.size() == 0)
    throw std::invalid_argument("signal_from_trajectory: empty trajectory");
  medium.validate();

  SignalTrace trace;
  trace.times_ns = trajectory.times_ns;
  trace.amplitude.resize(trajectory.size());
  const double scale = medium.prefactor_per_m() * medium.length_m * field_per_rabi;
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const double e_probe = probe(trajectory.times_ns[i] - probe_delay_ns);
    trace.amplitude[i] = scale * trajectory.abs_rho13[i] * e_probe;
  }
  return trace;
}

SignalTrace apply_detector_resolution(const SignalTrace& trace, double window_ns) {
  if (!(window_ns > 0.0))
    throw std::invalid_argument("apply_detector_resolution: window must be > 0");
  const std::size_t n = trace.size();
  if (n == 0) throw std::invalid_argument("apply_detector_resolution: empty trace");
  const double span = trace.times_ns.back() - trace.times_ns.front();
  if (n > 1 && window_ns > span)
    throw std::invalid_argument("apply_detector_resolution: window " +
                                std::to_string(window_ns) + " ns exceeds trace span " +
                                std::to_string(span) + " ns");

  SignalTrace out;
  out.times_ns = trace.times_ns;
  out.amplitude.resize(n);
  const double t_front = trace.times_ns.front();
  const double t_back = trace.times_ns.back();
  for (std::size_t i = 0; i < n; ++i) {
    const double t = trace.times_ns[i];
    // Keep the window centered: near the ends it shrinks symmetrically.
    const double half = std::min({0.5 * window_ns, t - t_front, t_back - t}) + 1e-9;
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t j = i; j-- > 0 && trace.times_ns[j] >= t - half;) {
      sum += trace.amplitude[j];
      ++count;
    }
    for (std::size_t j = i; j < n && trace.times_ns[j] <= t + half; ++j) {
      sum += trace.amplitude[j];
      ++count;
    }
    out.amplitude[i] = sum / static_cast<double>(count);
  }
  return out;
}

}  // namespace lambdasim
