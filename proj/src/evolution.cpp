#include "lambdasim/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lambdasim/scenarios.hpp"

namespace lambdasim {

namespace {

constexpr Complex kMinusI{0.0, -1.0};

Matrix3c master_rhs(const Matrix3c& rho, const Matrix3c& h, const LambdaSystem& system) {
  Matrix3c d = kMinusI * (h * rho - rho * h);
  d += dissipator(system, rho);
  return d;
}

// Frobenius norm of the Hamiltonian from the raw couplings; avoids
// building the matrix when only the guard is needed.
double hamiltonian_norm(const LambdaSystem& system, double omega_p, double omega_s) {
  return std::sqrt(0.5 * omega_p * omega_p + 0.5 * omega_s * omega_s +
                   system.delta_one_photon * system.delta_one_photon +
                   system.delta_two_photon * system.delta_two_photon);
}

void check_step_guard(const LambdaSystem& system, double omega_p, double omega_s,
                      double t_ns, double dt_ns) {
  const double scale = hamiltonian_norm(system, omega_p, omega_s) +
                       system.gamma_excited + system.gamma_ground;
  if (scale > 0.0 && dt_ns > 2.0 / scale)
    throw std::runtime_error("step-size guard violated at t=" + std::to_string(t_ns) +
                             " ns: dt=" + std::to_string(dt_ns) + " ns exceeds " +
                             std::to_string(2.0 / scale) + " ns");
}

DensityMatrix rk4_step(const DensityMatrix& rho, const LambdaSystem& system,
                       const PulseEnvelope& pump, const PulseEnvelope& stokes,
                       double t_ns, double dt_ns, double omega_p0, double omega_s0) {
  const double t_mid = t_ns + 0.5 * dt_ns;
  const double t_end = t_ns + dt_ns;

  const Matrix3c h0 = build_hamiltonian(system, omega_p0, omega_s0);
  const Matrix3c h_mid = build_hamiltonian(system, pump(t_mid), stokes(t_mid));
  const Matrix3c h1 = build_hamiltonian(system, pump(t_end), stokes(t_end));

  const Matrix3c& r = rho.matrix();
  const Matrix3c k1 = master_rhs(r, h0, system);
  const Matrix3c k2 = master_rhs(r + (0.5 * dt_ns) * k1, h_mid, system);
  const Matrix3c k3 = master_rhs(r + (0.5 * dt_ns) * k2, h_mid, system);
  const Matrix3c k4 = master_rhs(r + dt_ns * k3, h1, system);

  const Matrix3c next = r + (dt_ns / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  return DensityMatrix::renormalized(next);
}

}  // namespace

void TimeGrid::validate() const {
  if (!(t_end_ns > t_start_ns))
    throw std::invalid_argument("TimeGrid: t_end must exceed t_start");
  if (!(dt_ns > 0.0))
    throw std::invalid_argument("TimeGrid: dt must be > 0, got " + std::to_string(dt_ns));
  if (sample_every < 1)
    throw std::invalid_argument("TimeGrid: sample_every must be >= 1, got " +
                                std::to_string(sample_every));
}

std::int64_t TimeGrid::step_count() const {
  const double span = t_end_ns - t_start_ns;
  const auto n = static_cast<std::int64_t>(std::ceil(span / dt_ns - 1e-9));
  return n > 0 ? n : 1;
}

DensityMatrix step(const DensityMatrix& rho, const LambdaSystem& system,
                   const PulseEnvelope& pump, const PulseEnvelope& stokes,
                   double t_ns, double dt_ns) {
  if (!(dt_ns > 0.0)) throw std::invalid_argument("step: dt must be > 0");
  system.validate();
  const double omega_p = pump(t_ns);
  const double omega_s = stokes(t_ns);
  check_step_guard(system, omega_p, omega_s, t_ns, dt_ns);
  return rk4_step(rho, system, pump, stokes, t_ns, dt_ns, omega_p, omega_s);
}

Trajectory evolve(const LambdaSystem& system, const PulseEnvelope& pump,
                  const PulseEnvelope& stokes, const TimeGrid& grid,
                  const DensityMatrix& initial, const EvolveOptions& options) {
  system.validate();
  grid.validate();

  const std::int64_t n_steps = grid.step_count();
  Trajectory traj;
  const auto n_samples = static_cast<std::size_t>(n_steps / grid.sample_every + 2);
  traj.times_ns.reserve(n_samples);
  traj.states.reserve(n_samples);
  traj.p1.reserve(n_samples);
  traj.p2.reserve(n_samples);
  traj.p3.reserve(n_samples);
  traj.abs_rho13.reserve(n_samples);

  auto record = [&](double t, const DensityMatrix& state) {
    if (options.validate_samples) {
      try {
        state.validate(options.trace_tol, options.eigenvalue_floor);
      } catch (const std::runtime_error& e) {
        throw std::runtime_error("evolve: invariant breach at t=" + std::to_string(t) +
                                 " ns: " + e.what());
      }
    }
    traj.times_ns.push_back(t);
    traj.states.push_back(state);
    traj.p1.push_back(state.population(1));
    traj.p2.push_back(state.population(2));
    traj.p3.push_back(state.population(3));
    traj.abs_rho13.push_back(state.abs_coherence_13());
  };

  DensityMatrix state = initial;
  record(grid.t_start_ns, state);

  for (std::int64_t k = 0; k < n_steps; ++k) {
    const double t = grid.t_start_ns + static_cast<double>(k) * grid.dt_ns;
    const bool last = (k == n_steps - 1);
    const double t_next = last ? grid.t_end_ns
                               : grid.t_start_ns + static_cast<double>(k + 1) * grid.dt_ns;
    const double h = t_next - t;
    if (!(h > 0.0)) continue;  // degenerate final sliver

    const double omega_p = pump(t);
    const double omega_s = stokes(t);
    check_step_guard(system, omega_p, omega_s, t, grid.dt_ns);
    state = rk4_step(state, system, pump, stokes, t, h, omega_p, omega_s);

    if ((k + 1) % grid.sample_every == 0 || last) record(t_next, state);
  }
  return traj;
}

Trajectory evolve(const Scenario& scenario, const EvolveOptions& options) {
  scenario.validate();
  return evolve(scenario.system, scenario.pump, scenario.stokes, scenario.grid,
                scenario.initial_state(), options);
}

}  // namespace lambdasim
