#ifndef KERRQC_SUPEROPERATOR_HPP
#define KERRQC_SUPEROPERATOR_HPP

#include <optional>

#include "kerrqc/pauli.hpp"

namespace kerrqc {

using Superoperator16 = Eigen::Matrix<std::complex<double>, 16, 16>;
using Vector16cd = Eigen::Matrix<std::complex<double>, 16, 1>;

/// Column-major stacking; vec(A X B) = (B^T kron A) vec(X).
Vector16cd vectorize(const Matrix4cd& m);
Matrix4cd unvectorize(const Vector16cd& v);

/// Superoperators for rho -> A rho and rho -> rho B.
Superoperator16 left_mult(const Matrix4cd& a);
Superoperator16 right_mult(const Matrix4cd& b);

/// rho -> -i [h, rho]
Superoperator16 commutator_generator(const Matrix4cd& h);

/// Weighted sandwich rho -> w * (2 l rho k^dag - {k^dag l, rho}); the usual
/// GKSL dissipator term is l = k = jump operator.
Superoperator16 dissipator_term(const Matrix4cd& l, const Matrix4cd& k,
                                std::complex<double> w);

Matrix4cd apply(const Superoperator16& op, const Matrix4cd& rho);

/// Unit-trace steady state of a generator via SVD null space. With a
/// degenerate (2-dimensional) null space the tau_star constraint selects the
/// member of the family; without a constraint degeneracy is an error.
/// Relative singular-value tolerance 1e-9.
Matrix4cd steady_state_nullspace(const Superoperator16& op,
                                 std::optional<double> tau_star_constraint = std::nullopt);

}  // namespace kerrqc

#endif
