#include <doctest.h>

#include <cmath>

#include "kerrqc/two_bath.hpp"
#include "oracles.hpp"

using namespace kerrqc;

namespace {
const TwoQubitHamiltonian kHam(0.1, 0.1, 0.005);

double gibbs_population(double energy, const std::array<double, 4>& all, double kr) {
  double z = 0.0;
  for (double e : all) z += std::exp(-2.0 * M_PI * e / kr);
  return std::exp(-2.0 * M_PI * energy / kr) / z;
}
}  // namespace

TEST_CASE("hamiltonian matrix structure") {
  const Matrix4cd h = kHam.matrix();
  CHECK((h - h.adjoint()).norm() < 1e-15);
  CHECK(h(0, 0).real() == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(h(3, 3).real() == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(h(1, 2).real() == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(std::abs(h(0, 3)) < 1e-15);
  CHECK_THROWS_AS(TwoQubitHamiltonian(0.0, 0.1, 0.01), std::domain_error);
  CHECK_THROWS_AS(TwoQubitHamiltonian(0.1, -0.1, 0.01), std::domain_error);
}

TEST_CASE("eigen structure of the symmetric pair") {
  const EigenStructure es = eigen_structure(kHam);
  CHECK(es.kappa_mix == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(es.theta == doctest::Approx(M_PI / 2.0).epsilon(1e-14));
  CHECK(es.energy[0] == doctest::Approx(-0.1).epsilon(1e-14));
  CHECK(es.energy[1] == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(es.energy[2] == doctest::Approx(0.005).epsilon(1e-14));
  CHECK(es.energy[3] == doctest::Approx(-0.005).epsilon(1e-14));
  CHECK(es.omega_big1 == doctest::Approx(0.095).epsilon(1e-14));
  CHECK(es.omega_big2 == doctest::Approx(0.105).epsilon(1e-14));
  CHECK_THROWS_AS(eigen_structure(TwoQubitHamiltonian(0.1, 0.1, 0.0)), std::domain_error);
  CHECK_NOTHROW(eigen_structure(TwoQubitHamiltonian(0.1, 0.12, 0.0)));
}

TEST_CASE("eigenvectors against a dense eigensolver") {
  for (const TwoQubitHamiltonian& h :
       {kHam, TwoQubitHamiltonian(0.1, 0.17, 0.02), TwoQubitHamiltonian(0.3, 0.1, 0.004)}) {
    const EigenStructure es = eigen_structure(h);
    const Matrix4cd hm = h.matrix();
    double esum = 0.0;
    for (int k = 0; k < 4; ++k) {
      CHECK((hm * es.state[k] - es.energy[k] * es.state[k]).norm() < 1e-12);
      CHECK(std::abs(es.state[k].norm() - 1.0) < 1e-13);
      esum += es.energy[k];
    }
    CHECK(std::abs(esum) < 1e-13);  // traceless Hamiltonian
    // cross-check the full spectrum against Eigen
    Eigen::SelfAdjointEigenSolver<Matrix4cd> solver(hm);
    std::array<double, 4> mine = es.energy;
    std::sort(mine.begin(), mine.end());
    for (int k = 0; k < 4; ++k)
      CHECK(solver.eigenvalues()(k) == doctest::Approx(mine[k]).epsilon(1e-12));
  }
}

TEST_CASE("transition operators lower energy by their channel frequency") {
  for (const TwoQubitHamiltonian& h : {kHam, TwoQubitHamiltonian(0.1, 0.17, 0.02)}) {
    const EigenStructure es = eigen_structure(h);
    const TransitionOps ops = transition_ops(es);
    const Matrix4cd hm = h.matrix();
    CHECK(ops.freq[0] == doctest::Approx(es.omega_big2).epsilon(1e-14));
    CHECK(ops.freq[1] == doctest::Approx(es.omega_big1).epsilon(1e-14));
    for (int j = 0; j < 2; ++j)
      for (int ch = 0; ch < 2; ++ch) {
        const Matrix4cd& v = ops.v[j][ch];
        CHECK((hm * v - v * hm + ops.freq[ch] * v).norm() < 1e-12);
        CHECK(v.norm() > 0.0);
      }
    // per qubit the two channels recover the bare lowering operator
    const Matrix2cd lower = 0.5 * (sigma(1) - std::complex<double>(0, 1) * sigma(2));
    CHECK((ops.v[0][0] + ops.v[0][1] - kron(lower, sigma(0))).norm() < 1e-12);
    CHECK((ops.v[1][0] + ops.v[1][1] - kron(sigma(0), lower)).norm() < 1e-12);
  }
}

TEST_CASE("generator preserves trace and hermiticity") {
  const EigenStructure es = eigen_structure(kHam);
  const TransitionOps ops = transition_ops(es);
  const BathSpectrum b1(VacuumKind::Unruh, 0.4), b2(VacuumKind::Unruh, 0.1);
  const Superoperator16 gen = build_two_bath_liouvillian(es, ops, b1, b2, 0.01);
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix4cd rho = oracles::random_density(rng);
    const Matrix4cd d = apply(gen, rho);
    CHECK(std::abs(d.trace()) < 1e-15);
    CHECK((d - d.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("equal temperatures give the Gibbs state") {
  const EigenStructure es = eigen_structure(kHam);
  const TransitionOps ops = transition_ops(es);
  const double kr = 0.3;
  const BathSpectrum bath(VacuumKind::Unruh, kr);
  const auto p = neq_steady_populations(es, bath, bath);
  for (int k = 0; k < 4; ++k)
    CHECK(p[k] == doctest::Approx(gibbs_population(es.energy[k], es.energy, kr)).epsilon(1e-10));

  // each bath's dissipator annihilates the joint Gibbs state separately
  const Matrix4cd rho = neq_steady_state_closed_form(es, bath, bath);
  for (int j = 0; j < 2; ++j) {
    const Superoperator16 d = two_bath_dissipator(es, ops, bath, j, 0.1);
    CHECK(apply(d, rho).norm() < 1e-12);
  }
}

TEST_CASE("closed-form steady state matches the null-space solver") {
  const EigenStructure es = eigen_structure(kHam);
  const TransitionOps ops = transition_ops(es);
  for (auto [k1, k2] : {std::pair{0.5, 0.1}, {0.26, 0.25}, {0.05, 1.0}, {2.0, 0.4}}) {
    const BathSpectrum b1(VacuumKind::Unruh, k1), b2(VacuumKind::Unruh, k2);
    const Matrix4cd closed = neq_steady_state_closed_form(es, b1, b2);
    CHECK_NOTHROW(validate_density(closed));
    const Superoperator16 gen = build_two_bath_liouvillian(es, ops, b1, b2, 0.01);
    const Matrix4cd numeric = steady_state_nullspace(gen);
    CHECK((closed - numeric).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("detuned pair: closed form still matches the solver") {
  const TwoQubitHamiltonian ham(0.1, 0.14, 0.01);
  const EigenStructure es = eigen_structure(ham);
  const TransitionOps ops = transition_ops(es);
  const BathSpectrum b1(VacuumKind::Unruh, 0.7), b2(VacuumKind::Unruh, 0.2);
  const Matrix4cd closed = neq_steady_state_closed_form(es, b1, b2);
  const Matrix4cd numeric =
      steady_state_nullspace(build_two_bath_liouvillian(es, ops, b1, b2, 0.01));
  CHECK((closed - numeric).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("populations are a distribution and favor the ground state") {
  const EigenStructure es = eigen_structure(kHam);
  const BathSpectrum b1(VacuumKind::Unruh, 0.5), b2(VacuumKind::Unruh, 0.15);
  const auto p = neq_steady_populations(es, b1, b2);
  double sum = 0.0;
  for (double v : p) {
    CHECK(v > 0.0);
    sum += v;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p[0] > p[1]);  // ground beats doubly excited at positive temperatures
}

TEST_CASE("cold baths on both sides is rejected") {
  const EigenStructure es = eigen_structure(kHam);
  const BathSpectrum cold(VacuumKind::Boulware, 0.0);
  CHECK_THROWS_AS(neq_steady_populations(es, cold, cold), std::domain_error);
}

TEST_CASE("flux vanishes at equal temperatures") {
  const EigenStructure es = eigen_structure(kHam);
  const TransitionOps ops = transition_ops(es);
  const BathSpectrum bath(VacuumKind::Unruh, 0.3);
  const Matrix4cd rho = neq_steady_state_closed_form(es, bath, bath);
  const FluxReport fr = two_bath_flux(es, ops, bath, bath, 0.01, kHam, rho);
  CHECK(std::abs(fr.into_system_1) < 1e-12);
  CHECK(std::abs(fr.into_system_2) < 1e-12);
  CHECK(fr.steady);
}

TEST_CASE("flux runs from the hot bath to the cold bath and is conserved") {
  const EigenStructure es = eigen_structure(kHam);
  const TransitionOps ops = transition_ops(es);
  for (auto [k1, k2] : {std::pair{0.6, 0.2}, {1.5, 0.1}, {0.3, 0.29}}) {
    const BathSpectrum hot(VacuumKind::Unruh, k1), cold(VacuumKind::Unruh, k2);
    const Matrix4cd rho = neq_steady_state_closed_form(es, hot, cold);
    const FluxReport fr = two_bath_flux(es, ops, hot, cold, 0.01, kHam, rho);
    CHECK(fr.into_system_1 > 0.0);
    CHECK(fr.into_system_2 < 0.0);
    CHECK(std::abs(fr.into_system_1 + fr.into_system_2) < 1e-10);
    CHECK(fr.steady);
  }
}
