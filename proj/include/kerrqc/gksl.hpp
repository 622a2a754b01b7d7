#ifndef KERRQC_GKSL_HPP
#define KERRQC_GKSL_HPP

#include <array>

#include "kerrqc/bath_spectrum.hpp"
#include "kerrqc/superoperator.hpp"

namespace kerrqc {

using Vec3 = std::array<double, 3>;

/// Common-bath equilibrium steady state (two detectors at the same location,
/// thermal ratio R = B/A, conserved tau_*, Hamiltonian direction n).
/// Returned in PauliCoeffs normalization (expectation values divided by 4).
PauliCoeffs equilibrium_steady_state(double R, double tau_star_value, const Vec3& n);

/// Dissipative part of the two-detector common-bath generator with
/// Kossakowski blocks A delta_ij - i B eps_ijk n_k + C n_i n_j, identical for
/// all detector pairs. The Hamiltonian part is intentionally absent.
Superoperator16 build_common_bath_liouvillian(const DissipationCoeffs& coeffs, const Vec3& n);

/// Closed-form transient state of the one-coupled-qubit model: qubit A relaxes
/// with rates A (population) and A/2 (coherence, rotating at Omega), qubit B
/// is untouched. B/A sets the asymptotic polarization -B/A * c[0][j].
PauliCoeffs transient_evolution(const PauliCoeffs& p0, double A, double B, double Omega,
                                double tau);

/// Generator of the same model (dissipator on qubit A only, plus the gap
/// rotation), used to cross-check the closed form.
Superoperator16 build_single_coupled_liouvillian(double gamma_plus, double gamma_minus,
                                                 double omega);

}  // namespace kerrqc

#endif
