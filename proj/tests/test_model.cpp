#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lambdasim/model.hpp"
#include "lambdasim/pulses.hpp"

using namespace lambdasim;

namespace {

// Independent Lindblad oracle: builds the dissipator from jump operators
// with Eigen matrix algebra. The production path is element-wise; any
// disagreement flags an algebra slip on one side.
Matrix3c lindblad_oracle(const LambdaSystem& sys, const Matrix3c& rho) {
  std::vector<std::pair<double, Matrix3c>> channels;
  Matrix3c decay_1 = Matrix3c::Zero();
  decay_1(0, 1) = 1.0;  // |1><2|
  channels.emplace_back(sys.branch_to_1 * sys.gamma_excited, decay_1);
  Matrix3c decay_3 = Matrix3c::Zero();
  decay_3(2, 1) = 1.0;  // |3><2|
  channels.emplace_back((1.0 - sys.branch_to_1) * sys.gamma_excited, decay_3);
  // Projector dephasers on both ground states at gamma_ground give rho13
  // decay at gamma_ground and rho12/rho23 an extra gamma_ground/2.
  Matrix3c proj_1 = Matrix3c::Zero();
  proj_1(0, 0) = 1.0;
  channels.emplace_back(sys.gamma_ground, proj_1);
  Matrix3c proj_3 = Matrix3c::Zero();
  proj_3(2, 2) = 1.0;
  channels.emplace_back(sys.gamma_ground, proj_3);

  Matrix3c d = Matrix3c::Zero();
  for (const auto& [rate, op] : channels) {
    const Matrix3c op_dag = op.adjoint();
    d += rate * (op * rho * op_dag -
                 0.5 * (op_dag * op * rho + rho * op_dag * op));
  }
  return d;
}

DensityMatrix random_density(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix3c a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(u(rng), u(rng));
  return DensityMatrix::renormalized(a * a.adjoint());
}

}  // namespace

TEST_CASE("hamiltonian: resonant zero-field case is the zero matrix") {
  const LambdaSystem sys{};
  CHECK(build_hamiltonian(sys, 0.0, 0.0).norm() == 0.0);
}

TEST_CASE("hamiltonian: paper-scale couplings land on the off-diagonals") {
  const LambdaSystem sys{};
  const Matrix3c h = build_hamiltonian(sys, 0.09, 0.12);
  CHECK(h(0, 1).real() == doctest::Approx(-0.045).epsilon(1e-15));
  CHECK(h(1, 2).real() == doctest::Approx(-0.06).epsilon(1e-15));
  CHECK(h(0, 0) == Complex(0.0));
  CHECK(h(1, 1) == Complex(0.0));
  CHECK(h(2, 2) == Complex(0.0));
  CHECK(h(1, 0) == h(0, 1));
  CHECK(h(2, 1) == h(1, 2));
}

TEST_CASE("hamiltonian: detunings sit on the diagonal with a minus sign") {
  const LambdaSystem sys{0.02, -0.005, 0.0, 0.5, 0.0};
  const Matrix3c h = build_hamiltonian(sys, 0.0, 0.0);
  CHECK(h(1, 1).real() == doctest::Approx(-0.02));
  CHECK(h(2, 2).real() == doctest::Approx(0.005));
}

TEST_CASE("hamiltonian: rejects negative Rabi magnitudes") {
  const LambdaSystem sys{};
  CHECK_THROWS_AS(build_hamiltonian(sys, -0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian(sys, 0.0, -1e-9), std::invalid_argument);
}

TEST_CASE("hamiltonian: Hermitian for random inputs") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> omega(0.0, 1.0);
  std::uniform_real_distribution<double> det(-0.5, 0.5);
  for (int k = 0; k < 200; ++k) {
    const LambdaSystem sys{det(rng), det(rng), 0.0, 0.5, 0.0};
    const Matrix3c h = build_hamiltonian(sys, omega(rng), omega(rng));
    CHECK((h - h.adjoint()).norm() == 0.0);
  }
}

TEST_CASE("dark state: null eigenvector of the resonant Hamiltonian") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> omega(1e-6, 1.0);
  const LambdaSystem sys{};
  for (int k = 0; k < 500; ++k) {
    const double wp = omega(rng), ws = omega(rng);
    const Matrix3c h = build_hamiltonian(sys, wp, ws);
    const Vector3c ds = dark_state(mixing_angle(wp, ws));
    CHECK((h * ds).norm() <= 1e-12 * h.norm());
  }
}

TEST_CASE("dark state: matches the numerical null eigenvector") {
  // Oracle: eigendecomposition of H picks out the zero-eigenvalue state;
  // overlap with the analytic form must be unity up to a global phase.
  const LambdaSystem sys{};
  const double wp = 0.09, ws = 0.12;
  const Matrix3c h = build_hamiltonian(sys, wp, ws);
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(h);
  Eigen::Index null_index = 0;
  double best = 1e300;
  for (Eigen::Index i = 0; i < 3; ++i)
    if (std::abs(solver.eigenvalues()(i)) < best) {
      best = std::abs(solver.eigenvalues()(i));
      null_index = i;
    }
  CHECK(best <= 1e-14);
  const Vector3c numeric = solver.eigenvectors().col(null_index);
  const Vector3c analytic = dark_state(mixing_angle(wp, ws));
  CHECK(std::abs(numeric.dot(analytic)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dark state: endpoint and symmetry angles") {
  const Vector3c at_zero = dark_state(MixingAngle(0.0));
  CHECK(at_zero(0) == Complex(1.0));
  CHECK(at_zero(1) == Complex(0.0));
  CHECK(at_zero(2) == Complex(0.0));

  const Vector3c at_half_pi = dark_state(MixingAngle(M_PI_2));
  CHECK(std::abs(at_half_pi(0)) <= 1e-15);
  CHECK(at_half_pi(2).real() == doctest::Approx(-1.0).epsilon(1e-15));

  const Vector3c at_quarter = dark_state(MixingAngle(M_PI_4));
  CHECK(at_quarter(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(at_quarter(2).real() == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-15));

  std::mt19937 rng(3);
  std::uniform_real_distribution<double> angle(0.0, M_PI_2);
  for (int k = 0; k < 100; ++k) {
    const Vector3c v = dark_state(MixingAngle(angle(rng)));
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(v(1) == Complex(0.0));
  }
}

TEST_CASE("mixing angle: limits, paper ratio, errors") {
  CHECK(mixing_angle(0.0, 0.3).radians() == 0.0);
  CHECK(mixing_angle(0.7, 0.7).radians() == M_PI_4);
  CHECK(mixing_angle(0.09, 0.12).radians() ==
        doctest::Approx(0.6435011087932844).epsilon(1e-15));
  CHECK_THROWS_AS(mixing_angle(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(mixing_angle(-0.1, 0.2), std::invalid_argument);
  CHECK_THROWS_AS(MixingAngle(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(MixingAngle(M_PI), std::invalid_argument);
}

TEST_CASE("mixing angle: scale invariance") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> omega(1e-6, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double a = omega(rng), b = omega(rng);
    const double theta = mixing_angle(a, b).radians();
    for (const double c : {0.5, 2.0, 1024.0, 0x1p-20}) {
      CHECK(mixing_angle(c * a, c * b).radians() == theta);
    }
  }
}

TEST_CASE("analytic coherence: bound, maximum, paper ratio") {
  CHECK(analytic_coherence(MixingAngle(0.0)) == 0.0);
  CHECK(analytic_coherence(MixingAngle(M_PI_4)) == 0.5);
  CHECK(analytic_coherence(mixing_angle(0.09, 0.12)) ==
        doctest::Approx(0.48).epsilon(1e-15));

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> angle(0.0, M_PI_2);
  for (int k = 0; k < 500; ++k) {
    const double theta = angle(rng);
    const double c = analytic_coherence(MixingAngle(theta));
    CHECK(c <= 0.5);
    CHECK(c >= 0.0);
    if (std::abs(theta - M_PI_4) > 1e-4) CHECK(c < 0.5);
  }
}

TEST_CASE("dissipator: ground-state-only input is stationary") {
  const LambdaSystem sys{0.0, 0.0, 0.036, 0.5, 0.0};
  const auto rho = DensityMatrix::diagonal(1.0, 0.0, 0.0);
  CHECK(apply_dissipator(sys, rho).norm() == 0.0);
}

TEST_CASE("dissipator: excited population branches at the stated rates") {
  const LambdaSystem sys{0.0, 0.0, 0.036, 0.5, 0.0};
  const auto rho = DensityMatrix::diagonal(0.0, 1.0, 0.0);
  const Matrix3c d = apply_dissipator(sys, rho);
  CHECK(d(0, 0).real() == doctest::Approx(0.018).epsilon(1e-15));
  CHECK(d(2, 2).real() == doctest::Approx(0.018).epsilon(1e-15));
  CHECK(d(1, 1).real() == doctest::Approx(-0.036).epsilon(1e-15));
}

TEST_CASE("dissipator: pure dephasing drains rho13 at gamma_ground") {
  const LambdaSystem sys{0.0, 0.0, 0.0, 0.5, 5e-5};  // 1/(20 us)
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = 0.5;
  m(2, 2) = 0.5;
  m(0, 2) = m(2, 0) = 0.5;
  const auto rho = DensityMatrix::renormalized(m);
  const Matrix3c d = apply_dissipator(sys, rho);
  CHECK(d(0, 2).real() == doctest::Approx(-2.5e-5).epsilon(1e-12));
  CHECK(d(0, 0) == Complex(0.0));  // no population exchange
  CHECK(d(2, 2) == Complex(0.0));
}

TEST_CASE("dissipator: zero rates give the zero map") {
  const LambdaSystem sys{};
  std::mt19937 rng(17);
  for (int k = 0; k < 20; ++k)
    CHECK(apply_dissipator(sys, random_density(rng)).norm() == 0.0);
}

TEST_CASE("dissipator: traceless and Hermitian on random states") {
  const LambdaSystem sys{0.0, 0.0, 0.036, 0.3, 5e-5};
  std::mt19937 rng(19);
  for (int k = 0; k < 200; ++k) {
    const Matrix3c d = apply_dissipator(sys, random_density(rng));
    CHECK(std::abs(d.trace()) <= 1e-12);
    CHECK((d - d.adjoint()).norm() <= 1e-17);
  }
}

TEST_CASE("dissipator: agrees with the jump-operator oracle") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> rate(0.0, 0.1);
  std::uniform_real_distribution<double> branch(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const LambdaSystem sys{0.0, 0.0, rate(rng), branch(rng), rate(rng)};
    const auto rho = random_density(rng);
    const Matrix3c expected = lindblad_oracle(sys, rho.matrix());
    const Matrix3c actual = apply_dissipator(sys, rho);
    CHECK((actual - expected).norm() <= 1e-15);
  }
}

TEST_CASE("adiabaticity: constant fields and common scaling are perfectly adiabatic") {
  const auto pump_const = PulseEnvelope::constant(0.03);
  const auto stokes_const = PulseEnvelope::constant(0.05);
  CHECK(adiabaticity_parameter(pump_const, stokes_const, 100.0) == 0.0);

  const auto carrier = PulseEnvelope::gaussian(1.0, 5000.0, 2000.0);
  const auto pump = PulseEnvelope::scaled(carrier, 0.3);
  const auto stokes = PulseEnvelope::scaled(carrier, 0.7);
  for (double t : {3000.0, 5000.0, 7000.0})
    CHECK(adiabaticity_parameter(pump, stokes, t) <= 1e-12);
}

TEST_CASE("adiabaticity: fractional-STIRAP pulse pair is adiabatic through the overlap") {
  const auto pair = fractional_stirap_pair(
      0.09, 0.12, intensity_fwhm_to_rabi_fwhm(2000.0), intensity_fwhm_to_rabi_fwhm(24000.0),
      40000.0, 11000.0, 40000.0, 500.0);
  double worst = 0.0;
  for (double t = 36000.0; t <= 40000.0; t += 50.0)
    worst = std::max(worst, adiabaticity_parameter(pair.pump, pair.stokes, t));
  CHECK(worst < 0.1);
}

TEST_CASE("adiabaticity: undefined when both envelopes vanish") {
  const auto off = PulseEnvelope::constant(0.0);
  CHECK_THROWS_AS(adiabaticity_parameter(off, off, 10.0), std::domain_error);
}

TEST_CASE("density matrix: diagonal constructor validates") {
  CHECK_THROWS_AS(DensityMatrix::diagonal(0.5, 0.5, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::diagonal(-0.1, 1.1, 0.0), std::invalid_argument);
  const auto rho = DensityMatrix::diagonal(0.25, 0.25, 0.5);
  CHECK(rho.population(1) == 0.25);
  CHECK(rho.population(3) == 0.5);
  CHECK(rho.trace_real() == 1.0);
  CHECK_THROWS_AS(rho.population(0), std::invalid_argument);
}

TEST_CASE("density matrix: renormalized enforces exact Hermiticity and unit trace") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    Matrix3c a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = Complex(u(rng), u(rng));
    const auto rho = DensityMatrix::renormalized(a * a.adjoint());
    CHECK(rho.is_exactly_hermitian());
    CHECK(std::abs(rho.trace_real() - 1.0) <= 1e-15);
    CHECK(rho.min_eigenvalue() >= -1e-12);
  }
  CHECK_THROWS_AS(DensityMatrix::renormalized(Matrix3c::Zero()), std::runtime_error);
}

TEST_CASE("density matrix: validate flags drift") {
  Matrix3c bad = Matrix3c::Zero();
  bad(0, 0) = 1.0;
  bad(2, 2) = -1e-6;
  bad(0, 0) = 1.0 + 1e-6;
  const auto rho = DensityMatrix::renormalized(bad);
  CHECK_THROWS_AS(rho.validate(1e-9, -1e-8), std::runtime_error);
}

TEST_CASE("lambda system: invariants") {
  CHECK_THROWS_AS((LambdaSystem{0, 0, -0.1, 0.5, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((LambdaSystem{0, 0, 0.1, 1.5, 0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((LambdaSystem{0, 0, 0.1, 0.5, -1e-9}.validate()), std::invalid_argument);
  LambdaSystem ok{0.1, -0.1, 0.036, 0.5, 5e-5};
  ok.validate();
}
