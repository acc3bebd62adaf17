#include "lambdasim/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lambdasim {

void LambdaSystem::validate() const {
  if (!(gamma_excited >= 0.0))
    throw std::invalid_argument("LambdaSystem: gamma_excited must be >= 0, got " +
                                std::to_string(gamma_excited));
  if (!(gamma_ground >= 0.0))
    throw std::invalid_argument("LambdaSystem: gamma_ground must be >= 0, got " +
                                std::to_string(gamma_ground));
  if (!(branch_to_1 >= 0.0 && branch_to_1 <= 1.0))
    throw std::invalid_argument("LambdaSystem: branch_to_1 must be in [0,1], got " +
                                std::to_string(branch_to_1));
  if (!std::isfinite(delta_one_photon) || !std::isfinite(delta_two_photon))
    throw std::invalid_argument("LambdaSystem: detunings must be finite");
}

DensityMatrix DensityMatrix::diagonal(double p1, double p2, double p3) {
  if (p1 < 0.0 || p2 < 0.0 || p3 < 0.0)
    throw std::invalid_argument("DensityMatrix::diagonal: populations must be >= 0");
  const double sum = p1 + p2 + p3;
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("DensityMatrix::diagonal: populations must sum to 1, got " +
                                std::to_string(sum));
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = p1;
  m(1, 1) = p2;
  m(2, 2) = p3;
  return DensityMatrix(m);
}

DensityMatrix DensityMatrix::renormalized(const Matrix3c& m) {
  Matrix3c h;
  // Average the off-diagonal pairs once, then mirror, so Hermiticity is
  // exact at the bit level. Diagonals keep their real part only.
  for (int i = 0; i < 3; ++i) h(i, i) = Complex(m(i, i).real(), 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  const double tr = h.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr))
    throw std::runtime_error("DensityMatrix::renormalized: non-positive trace " +
                             std::to_string(tr));
  h /= tr;
  return DensityMatrix(h);
}

double DensityMatrix::population(int state) const {
  if (state < 1 || state > 3)
    throw std::invalid_argument("DensityMatrix::population: state must be 1, 2 or 3");
  return m_(state - 1, state - 1).real();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool DensityMatrix::is_exactly_hermitian() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (m_(i, j) != std::conj(m_(j, i))) return false;
  return true;
}

void DensityMatrix::validate(double trace_tol, double eig_floor) const {
  const double tr = trace_real();
  if (std::abs(tr - 1.0) > trace_tol)
    throw std::runtime_error("DensityMatrix: trace " + std::to_string(tr) +
                             " deviates from 1 beyond " + std::to_string(trace_tol));
  if (!is_exactly_hermitian())
    throw std::runtime_error("DensityMatrix: lost exact Hermiticity");
  const double lambda_min = min_eigenvalue();
  if (lambda_min < eig_floor)
    throw std::runtime_error("DensityMatrix: minimum eigenvalue " +
                             std::to_string(lambda_min) + " below floor " +
                             std::to_string(eig_floor));
}

MixingAngle::MixingAngle(double radians) : theta_(radians) {
  if (!(radians >= 0.0 && radians <= M_PI_2))
    throw std::invalid_argument("MixingAngle: angle must lie in [0, pi/2], got " +
                                std::to_string(radians));
}

Matrix3c build_hamiltonian(const LambdaSystem& system, double omega_p, double omega_s) {
  system.validate();
  if (omega_p < 0.0 || omega_s < 0.0)
    throw std::invalid_argument("build_hamiltonian: Rabi magnitudes must be >= 0");
  Matrix3c h = Matrix3c::Zero();
  h(0, 1) = h(1, 0) = -0.5 * omega_p;
  h(1, 2) = h(2, 1) = -0.5 * omega_s;
  h(1, 1) = -system.delta_one_photon;
  h(2, 2) = -system.delta_two_photon;
  return h;
}

Matrix3c dissipator(const LambdaSystem& system, const Matrix3c& rho) {
  const double gamma = system.gamma_excited;
  const double to_1 = system.branch_to_1 * gamma;
  const double to_3 = (1.0 - system.branch_to_1) * gamma;
  const double gg = system.gamma_ground;
  const double optical = 0.5 * gamma + 0.5 * gg;  // rho12, rho23 decay rate

  Matrix3c d;
  d(0, 0) = to_1 * rho(1, 1);
  d(1, 1) = -(to_1 + to_3) * rho(1, 1);
  d(2, 2) = to_3 * rho(1, 1);
  d(0, 1) = -optical * rho(0, 1);
  d(1, 0) = -optical * rho(1, 0);
  d(1, 2) = -optical * rho(1, 2);
  d(2, 1) = -optical * rho(2, 1);
  d(0, 2) = -gg * rho(0, 2);
  d(2, 0) = -gg * rho(2, 0);
  return d;
}

Matrix3c apply_dissipator(const LambdaSystem& system, const DensityMatrix& rho) {
  system.validate();
  return dissipator(system, rho.matrix());
}

MixingAngle mixing_angle(double omega_p, double omega_s) {
  if (omega_p < 0.0 || omega_s < 0.0)
    throw std::invalid_argument("mixing_angle: Rabi magnitudes must be >= 0");
  if (omega_p == 0.0 && omega_s == 0.0)
    throw std::domain_error("mixing_angle: undefined, both Rabi amplitudes are zero");
  return MixingAngle(std::atan2(omega_p, omega_s));
}

Vector3c dark_state(const MixingAngle& theta) {
  Vector3c v;
  v << std::cos(theta.radians()), 0.0, -std::sin(theta.radians());
  return v;
}

double analytic_coherence(const MixingAngle& theta) {
  // cos*sin written as sin(2 theta)/2 so the 0.5 bound holds exactly.
  return 0.5 * std::sin(2.0 * theta.radians());
}

double adiabaticity_parameter(const PulseEnvelope& pump, const PulseEnvelope& stokes,
                              double t_ns) {
  const double omega_p = pump(t_ns);
  const double omega_s = stokes(t_ns);
  if (omega_p == 0.0 && omega_s == 0.0)
    throw std::domain_error("adiabaticity_parameter: undefined, both envelopes are zero at t=" +
                            std::to_string(t_ns) + " ns");
  const double h = 1.0;  // ns
  const double theta_plus = mixing_angle(pump(t_ns + h), stokes(t_ns + h)).radians();
  const double theta_minus = mixing_angle(pump(t_ns - h), stokes(t_ns - h)).radians();
  const double dtheta_dt = (theta_plus - theta_minus) / (2.0 * h);
  return std::abs(dtheta_dt) / std::hypot(omega_p, omega_s);
}

}  // namespace lambdasim
