#ifndef KERRQC_PAULI_HPP
#define KERRQC_PAULI_HPP

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <stdexcept>

namespace kerrqc {

using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;

/// sigma_0 .. sigma_3 (identity + Pauli matrices). Basis convention:
/// e_0 = excited (sigma_3 eigenvalue +1), e_1 = ground.
const Matrix2cd& sigma(int i);

/// Kronecker product of two one-qubit operators; qubit A is the left factor.
Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b);

/// sigma_i (x) sigma_j on the two-qubit space.
const Matrix4cd& sigma2(int i, int j);

/// Real expansion coefficients of a two-qubit state over sigma_i (x) sigma_j:
///   rho = sum_ij c[i][j] sigma_i (x) sigma_j,  c[i][j] = Tr(rho sigma_i sigma_j)/4,
/// so c[0][0] = 1/4 for a unit-trace state.
struct PauliCoeffs {
  std::array<std::array<double, 4>, 4> c{};

  static PauliCoeffs bell();             // (|00> + |11>)/sqrt2
  static PauliCoeffs maximally_mixed();  // I/4
};

Matrix4cd pauli_to_density(const PauliCoeffs& p);
PauliCoeffs density_to_pauli(const Matrix4cd& m);

/// Trace of the correlation block, tau_* = sum_i Tr(rho sigma_i sigma_i)
/// (the Eq.-43-style normalization, i.e. 4 * sum_i c[i][i]).
double tau_star(const PauliCoeffs& p);
double tau_star(const Matrix4cd& m);

/// Throws unless m is Hermitian and unit trace to tol and its eigenvalues
/// are >= -psd_tol.
void validate_density(const Matrix4cd& m, double tol = 1e-12, double psd_tol = 1e-10);

bool is_hermitian(const Matrix4cd& m, double tol = 1e-12);

/// Eigenvalues with values in [-psd_tol, 0) clipped to 0 and the spectrum
/// renormalized to unit sum. Throws on eigenvalues below -psd_tol.
Eigen::VectorXd clipped_spectrum(const Eigen::MatrixXcd& m, double psd_tol = 1e-10);

/// Partial traces; qubit A is the left tensor factor.
Matrix2cd partial_trace_B(const Matrix4cd& m);
Matrix2cd partial_trace_A(const Matrix4cd& m);

}  // namespace kerrqc

#endif
