#include "kerrqc/pauli.hpp"

namespace kerrqc {

namespace {
using namespace std::complex_literals;

std::array<Matrix2cd, 4> make_paulis() {
  std::array<Matrix2cd, 4> s;
  s[0] << 1, 0, 0, 1;
  s[1] << 0, 1, 1, 0;
  s[2] << 0, -1i, 1i, 0;
  s[3] << 1, 0, 0, -1;
  return s;
}

std::array<Matrix4cd, 16> make_pauli_pairs() {
  std::array<Matrix4cd, 16> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[4 * i + j] = kron(sigma(i), sigma(j));
  return out;
}
}  // namespace

const Matrix2cd& sigma(int i) {
  static const std::array<Matrix2cd, 4> s = make_paulis();
  return s.at(static_cast<std::size_t>(i));
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

const Matrix4cd& sigma2(int i, int j) {
  static const std::array<Matrix4cd, 16> s = make_pauli_pairs();
  return s.at(static_cast<std::size_t>(4 * i + j));
}

PauliCoeffs PauliCoeffs::bell() {
  PauliCoeffs p;
  p.c[0][0] = 0.25;
  p.c[1][1] = 0.25;
  p.c[2][2] = -0.25;
  p.c[3][3] = 0.25;
  return p;
}

PauliCoeffs PauliCoeffs::maximally_mixed() {
  PauliCoeffs p;
  p.c[0][0] = 0.25;
  return p;
}

Matrix4cd pauli_to_density(const PauliCoeffs& p) {
  Matrix4cd m = Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (p.c[i][j] != 0.0) m += p.c[i][j] * sigma2(i, j);
  return m;
}

PauliCoeffs density_to_pauli(const Matrix4cd& m) {
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument("density_to_pauli: matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > 1e-10)
    throw std::invalid_argument("density_to_pauli: trace is not 1");
  PauliCoeffs p;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      p.c[i][j] = 0.25 * (m * sigma2(i, j)).trace().real();
  return p;
}

double tau_star(const PauliCoeffs& p) {
  return 4.0 * (p.c[1][1] + p.c[2][2] + p.c[3][3]);
}

double tau_star(const Matrix4cd& m) {
  double t = 0.0;
  for (int i = 1; i < 4; ++i) t += (m * sigma2(i, i)).trace().real();
  return t;
}

bool is_hermitian(const Matrix4cd& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void validate_density(const Matrix4cd& m, double tol, double psd_tol) {
  if (!is_hermitian(m, tol)) throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(m.trace() - 1.0) > tol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -psd_tol)
    throw std::invalid_argument("density matrix has a negative eigenvalue");
}

Eigen::VectorXd clipped_spectrum(const Eigen::MatrixXcd& m, double psd_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < -psd_tol)
      throw std::domain_error("clipped_spectrum: eigenvalue below tolerance");
    if (ev[i] < 0.0) ev[i] = 0.0;
  }
  const double sum = ev.sum();
  if (sum > 0.0) ev /= sum;
  return ev;
}

Matrix2cd partial_trace_B(const Matrix4cd& m) {
  Matrix2cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  return out;
}

Matrix2cd partial_trace_A(const Matrix4cd& m) {
  Matrix2cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out(i, j) = m(i, j) + m(i + 2, j + 2);
  return out;
}

}  // namespace kerrqc
