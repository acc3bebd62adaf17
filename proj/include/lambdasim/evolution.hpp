#pragma once

#include <cstdint>
#include <vector>

#include "lambdasim/model.hpp"
#include "lambdasim/pulses.hpp"

namespace lambdasim {

struct Scenario;

/// Integration grid. The integrator takes fixed RK4 steps of dt_ns from
/// t_start_ns, with one shortened final step if the span is not an exact
/// multiple of dt_ns, and records every sample_every-th state (the end
/// state is always recorded). The stability guard
///   dt <= 2 / (||H(t)||_F + gamma_excited + gamma_ground)
/// is enforced at run time at every step.
struct TimeGrid {
  double t_start_ns = 0.0;
  double t_end_ns = 0.0;
  double dt_ns = 0.5;
  int sample_every = 400;  // 200 ns sampling at the default dt

  void validate() const;
  std::int64_t step_count() const;

  bool operator==(const TimeGrid&) const = default;
};

/// Sampled time series of the evolving state with derived observables.
struct Trajectory {
  std::vector<double> times_ns;
  std::vector<DensityMatrix> states;
  std::vector<double> p1, p2, p3;
  std::vector<double> abs_rho13;

  std::size_t size() const { return times_ns.size(); }
};

/// One classical RK4 step of the master equation
///   drho/dt = -i [H(t), rho] + D(rho).
/// The result is re-hermitized (exact mirror) and renormalized to unit
/// trace. Throws if dt violates the step-size guard at t.
DensityMatrix step(const DensityMatrix& rho, const LambdaSystem& system,
                   const PulseEnvelope& pump, const PulseEnvelope& stokes,
                   double t_ns, double dt_ns);

struct EvolveOptions {
  /// Check trace, Hermiticity and positivity of every recorded sample;
  /// violations raise std::runtime_error naming the failure time.
  bool validate_samples = true;
  double trace_tol = 1e-9;
  double eigenvalue_floor = -1e-8;
};

Trajectory evolve(const LambdaSystem& system, const PulseEnvelope& pump,
                  const PulseEnvelope& stokes, const TimeGrid& grid,
                  const DensityMatrix& initial, const EvolveOptions& options = {});

/// Scenario-level entry point (see scenarios.hpp).
Trajectory evolve(const Scenario& scenario, const EvolveOptions& options = {});

}  // namespace lambdasim
