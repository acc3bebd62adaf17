#pragma once

#include <complex>

#include <Eigen/Dense>

#include "lambdasim/pulses.hpp"

namespace lambdasim {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;

/// Three-level Lambda system in the rotating frame after the RWA.
///
/// States are labelled {1,2,3}: |1> and |3> are the two ground states,
/// |2> the excited intermediate state. Code indices are 0-based, so the
/// ground-state coherence rho13 sits at matrix entry (0,2). Times are ns,
/// rates 1/ns, detunings and Rabi amplitudes rad/ns.
struct LambdaSystem {
  double delta_one_photon = 0.0;  ///< pump detuning from |1>-|2>, rad/ns
  double delta_two_photon = 0.0;  ///< two-photon (Raman) detuning, rad/ns
  double gamma_excited = 0.0;     ///< total population decay rate of |2>, 1/ns
  double branch_to_1 = 0.5;       ///< fraction of gamma_excited decaying into |1>
  double gamma_ground = 0.0;      ///< dephasing rate of rho13, 1/ns

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool operator==(const LambdaSystem&) const = default;
};

/// 3x3 Hermitian, trace-one density matrix of the Lambda system.
/// Hermiticity is exact by construction (upper triangle mirrored).
class DensityMatrix {
 public:
  /// Diagonal state with populations (p1, p2, p3); they must be
  /// non-negative and sum to 1 within 1e-12.
  static DensityMatrix diagonal(double p1, double p2, double p3);

  /// Re-hermitizes (exact mirror of the averaged upper triangle) and
  /// renormalizes to unit trace. Throws if the trace is not positive.
  static DensityMatrix renormalized(const Matrix3c& m);

  const Matrix3c& matrix() const { return m_; }

  /// Population of state 1, 2 or 3.
  double population(int state) const;
  Complex coherence_13() const { return m_(0, 2); }
  double abs_coherence_13() const { return std::abs(m_(0, 2)); }

  double trace_real() const { return m_.trace().real(); }
  double min_eigenvalue() const;
  bool is_exactly_hermitian() const;

  /// Checks |trace - 1| <= trace_tol and min eigenvalue >= eig_floor;
  /// throws std::runtime_error on violation.
  void validate(double trace_tol = 1e-9, double eig_floor = -1e-8) const;

  bool operator==(const DensityMatrix& other) const { return m_ == other.m_; }

 private:
  explicit DensityMatrix(const Matrix3c& m) : m_(m) {}
  Matrix3c m_;
};

/// Pump/Stokes mixing angle, radians in [0, pi/2].
class MixingAngle {
 public:
  explicit MixingAngle(double radians);
  double radians() const { return theta_; }
  bool operator==(const MixingAngle&) const = default;

 private:
  double theta_;
};

/// Rotating-frame Hamiltonian over hbar, rad/ns:
///   H11 = 0, H22 = -delta_one_photon, H33 = -delta_two_photon,
///   H12 = H21 = -omega_p/2, H23 = H32 = -omega_s/2.
/// The -Omega/2 sign convention makes (cos theta, 0, -sin theta) the
/// null eigenvector on two-photon resonance. Rejects negative Rabi
/// magnitudes (envelopes are real and non-negative, phases zero).
Matrix3c build_hamiltonian(const LambdaSystem& system, double omega_p, double omega_s);

/// Dissipator contribution to drho/dt (1/ns) for any 3x3 input, used by
/// the integrator on raw RK4 stage matrices. Channels: |2> -> |1> at
/// branch_to_1 * gamma_excited, |2> -> |3> at the remainder, and pure
/// dephasing of rho13 at gamma_ground. Per the Lindblad algebra the
/// optical coherences rho12, rho23 decay at gamma_excited/2 +
/// gamma_ground/2; populations see no ground-state term.
Matrix3c dissipator(const LambdaSystem& system, const Matrix3c& rho);

/// Spec-facing wrapper over dissipator() for valid density matrices.
/// Output is Hermitian and traceless.
Matrix3c apply_dissipator(const LambdaSystem& system, const DensityMatrix& rho);

/// theta = atan2(omega_p, omega_s). Throws std::domain_error when both
/// amplitudes are zero (undefined angle; the caller decides, e.g. keeps
/// the frozen post-cutoff value).
MixingAngle mixing_angle(double omega_p, double omega_s);

/// Dark state (cos theta, 0, -sin theta): unit norm, no excited-state
/// component.
Vector3c dark_state(const MixingAngle& theta);

/// Adiabatic-limit ground-state coherence cos(theta) sin(theta),
/// in [0, 0.5].
double analytic_coherence(const MixingAngle& theta);

/// Local adiabaticity criterion |dtheta/dt| / sqrt(omega_p^2 + omega_s^2)
/// at time t; values much below 1 indicate adiabatic following.
/// dtheta/dt uses a central finite difference with a 1 ns step.
double adiabaticity_parameter(const PulseEnvelope& pump, const PulseEnvelope& stokes,
                              double t_ns);

}  // namespace lambdasim
