#ifndef KERRQC_TWO_BATH_HPP
#define KERRQC_TWO_BATH_HPP

#include <array>

#include "kerrqc/bath_spectrum.hpp"
#include "kerrqc/superoperator.hpp"

namespace kerrqc {

/// Two interacting qubits with gaps omega1, omega2 and exchange coupling K.
struct TwoQubitHamiltonian {
  double omega1;
  double omega2;
  double coupling;

  TwoQubitHamiltonian(double w1, double w2, double k)
      : omega1(w1), omega2(w2), coupling(k) {
    if (w1 <= 0.0 || w2 <= 0.0)
      throw std::domain_error("TwoQubitHamiltonian: gaps must be positive");
  }

  bool symmetric() const { return omega1 == omega2; }

  Matrix4cd matrix() const;
};

/// Eigenstates of the coupled pair. Basis ordering lambda_1..lambda_4 is
/// ground, doubly excited, symmetric-mixed, antisymmetric-mixed:
///   E1 = -(w1+w2)/2, E2 = +(w1+w2)/2, E3 = kappa_mix, E4 = -kappa_mix,
///   kappa_mix = sqrt(K^2 + (w1-w2)^2/4), theta = atan2(2K, w1-w2),
///   Omega1 = E2 - E3, Omega2 = E2 + E3.
struct EigenStructure {
  std::array<double, 4> energy;
  double theta;
  double kappa_mix;
  double omega_big1;  // Omega1 = E2 - E3
  double omega_big2;  // Omega2 = E2 + E3
  std::array<Eigen::Vector4cd, 4> state;  // bare-basis eigenvectors
};

EigenStructure eigen_structure(const TwoQubitHamiltonian& h);

/// Eigenbasis transition (lowering) operators, one per (qubit, frequency
/// channel). ops[j][0] lowers by Omega2, ops[j][1] lowers by Omega1.
struct TransitionOps {
  std::array<std::array<Matrix4cd, 2>, 2> v;
  std::array<double, 2> freq;  // {Omega2, Omega1}
};

TransitionOps transition_ops(const EigenStructure& es);

/// Full two-bath generator: -i[H, .] plus one dissipator per bath, with
/// downward rates mu^2 G_j(+Omega) and upward rates mu^2 G_j(-Omega).
Superoperator16 build_two_bath_liouvillian(const EigenStructure& es, const TransitionOps& ops,
                                           const BathSpectrum& spec1, const BathSpectrum& spec2,
                                           double mu);

/// Dissipator of bath j alone (j = 0 or 1), same convention.
Superoperator16 two_bath_dissipator(const EigenStructure& es, const TransitionOps& ops,
                                    const BathSpectrum& spec, int j, double mu);

/// Detailed-balance closed form of the nonequilibrium steady state:
/// populations over (lambda_1, lambda_2, lambda_3, lambda_4).
std::array<double, 4> neq_steady_populations(const EigenStructure& es,
                                             const BathSpectrum& spec1,
                                             const BathSpectrum& spec2);

/// The same state expressed in the bare (computational) basis.
Matrix4cd neq_steady_state_closed_form(const EigenStructure& es, const BathSpectrum& spec1,
                                       const BathSpectrum& spec2);

/// Energy flux Tr[D(rho) H] from one bath into the system; positive means the
/// bath injects energy.
double flux(const Superoperator16& dissipator, const Matrix4cd& rho_ss,
            const TwoQubitHamiltonian& h);

struct FluxReport {
  double into_system_1;
  double into_system_2;
  bool steady;  // residual of the summed generator below 1e-8
};

FluxReport two_bath_flux(const EigenStructure& es, const TransitionOps& ops,
                         const BathSpectrum& spec1, const BathSpectrum& spec2, double mu,
                         const TwoQubitHamiltonian& h, const Matrix4cd& rho_ss);

}  // namespace kerrqc

#endif
