#include "kerrqc/superoperator.hpp"

#include <string>
#include <vector>

namespace kerrqc {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};

Superoperator16 kron16(const Matrix4cd& a, const Matrix4cd& b) {
  Superoperator16 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return out;
}
}  // namespace

Vector16cd vectorize(const Matrix4cd& m) {
  return Eigen::Map<const Vector16cd>(m.data());
}

Matrix4cd unvectorize(const Vector16cd& v) {
  return Eigen::Map<const Matrix4cd>(v.data());
}

Superoperator16 left_mult(const Matrix4cd& a) {
  return kron16(Matrix4cd::Identity(), a);
}

Superoperator16 right_mult(const Matrix4cd& b) {
  return kron16(b.transpose(), Matrix4cd::Identity());
}

Superoperator16 commutator_generator(const Matrix4cd& h) {
  return -kI * (left_mult(h) - right_mult(h));
}

Superoperator16 dissipator_term(const Matrix4cd& l, const Matrix4cd& k,
                                std::complex<double> w) {
  const Matrix4cd kl = k.adjoint() * l;
  Superoperator16 sandwich = 2.0 * kron16(k.conjugate(), l);
  return w * (sandwich - left_mult(kl) - right_mult(kl));
}

Matrix4cd apply(const Superoperator16& op, const Matrix4cd& rho) {
  return unvectorize(op * vectorize(rho));
}

Matrix4cd steady_state_nullspace(const Superoperator16& op,
                                 std::optional<double> tau_star_constraint) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = 1e-9 * sv(0);
  int dim = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= tol) ++dim;
  if (dim == 0)
    throw std::runtime_error("steady_state_nullspace: no null vector within tolerance");

  if (dim == 1) {
    Matrix4cd rho = unvectorize(svd.matrixV().col(15));
    rho = 0.5 * (rho + rho.adjoint()).eval();
    const std::complex<double> tr = rho.trace();
    if (std::abs(tr) < 1e-12)
      throw std::runtime_error("steady_state_nullspace: traceless null vector");
    rho /= tr;
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return rho;
  }

  if (!tau_star_constraint || dim > 2)
    throw std::runtime_error("steady_state_nullspace: degenerate null space of dimension " +
                             std::to_string(dim));

  // Two-dimensional family: pin trace = 1 and the conserved tau_*. The null
  // space is closed under rho -> rho^dag, so Hermitian/anti-Hermitian parts of
  // the null vectors span it; pick two independent Hermitian members.
  std::vector<Matrix4cd> basis;
  for (int col = 15; col >= 14; --col) {
    const Matrix4cd m = unvectorize(svd.matrixV().col(col));
    const Matrix4cd re = 0.5 * (m + m.adjoint());
    const Matrix4cd im = Matrix4cd(-0.5 * kI * (m - m.adjoint()));
    for (const Matrix4cd* cand : {&re, &im}) {
      Matrix4cd r = *cand;
      for (const auto& b : basis)
        r -= ((b.adjoint() * r).trace() / (b.adjoint() * b).trace()) * b;
      if (r.norm() > 1e-8) basis.push_back(r / r.norm());
      if (basis.size() == 2) break;
    }
    if (basis.size() == 2) break;
  }
  if (basis.size() < 2)
    throw std::runtime_error("steady_state_nullspace: could not span null space");
  const Matrix4cd& h0 = basis[0];
  const Matrix4cd& h1 = basis[1];
  Eigen::Matrix2d real_sys;
  real_sys << h0.trace().real(), h1.trace().real(), tau_star(h0), tau_star(h1);
  if (std::abs(real_sys.determinant()) < 1e-12)
    throw std::runtime_error("steady_state_nullspace: tau_star constraint is degenerate");
  Eigen::Vector2d rhs(1.0, *tau_star_constraint);
  const Eigen::Vector2d coef = real_sys.colPivHouseholderQr().solve(rhs);
  Matrix4cd rho = coef(0) * h0 + coef(1) * h1;
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return rho;
}

}  // namespace kerrqc
