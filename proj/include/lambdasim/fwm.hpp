#pragma once

#include <vector>

#include "lambdasim/evolution.hpp"
#include "lambdasim/pulses.hpp"

namespace lambdasim {

/// Vapor-cell parameters for the four-wave-mixing signal map. The medium
/// is treated as thin: the generated field grows linearly over the cell
/// length with rho13 constant along z.
///
/// The paper's experiment does not publish dipole moments, probe detuning
/// or cell length; the defaults below are representative Rb D1 values and
/// set the (arbitrary) signal scale only.
struct FwmMedium {
  double number_density_cm3 = 1e11;  ///< N, atoms per cm^3
  double omega_fwm = 2.369e15;       ///< FWM carrier angular frequency, rad/s
  double mu_13 = 2.537e-29;          ///< dipole moment |1>-|3> leg, C*m
  double mu_23 = 2.537e-29;          ///< dipole moment |2>-|3> leg, C*m
  double delta_probe = 6.283e8;      ///< probe detuning from |2>-|3>, rad/s (nonzero)
  double length_m = 0.05;            ///< cell length L, m

  void validate() const;

  /// pi N omega mu13 mu23 / (hbar c eps0 delta_probe), 1/m.
  double prefactor_per_m() const;

  bool operator==(const FwmMedium&) const = default;
};

/// FWM field amplitude time series; amplitudes are |E_FWM| in V/m when
/// the probe is given in field units, arbitrary units otherwise.
struct SignalTrace {
  std::vector<double> times_ns;
  std::vector<double> amplitude;

  std::size_t size() const { return times_ns.size(); }
};

/// |E_FWM| = prefactor * |rho13| * |E_pr| * L for a thin medium.
/// rho13_abs must lie in [0, 0.5] (tiny integrator overshoot tolerated),
/// e_probe must be >= 0. Linear in both magnitudes.
double fwm_field(double rho13_abs, double e_probe, const FwmMedium& medium);

/// Applies fwm_field pointwise over a trajectory: at each sample t the
/// probe envelope is evaluated at t - probe_delay_ns and converted to
/// field units via field_per_rabi (V/m per rad/ns; 1 keeps arbitrary
/// units). The probe does not act back on the dynamics.
SignalTrace signal_from_trajectory(const Trajectory& trajectory, const PulseEnvelope& probe,
                                   const FwmMedium& medium, double probe_delay_ns,
                                   double field_per_rabi = 1.0);

/// Centered moving average over the given time window, modeling the
/// detector's finite resolution; windows shrink symmetrically at the
/// trace ends. Throws if the window exceeds the trace span.
SignalTrace apply_detector_resolution(const SignalTrace& trace, double window_ns);

}  // namespace lambdasim
