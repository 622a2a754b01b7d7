#include "kerrqc/gksl.hpp"

#include <cmath>

namespace kerrqc {

namespace {
constexpr double kEps[3][3][3] = {
    {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
    {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
    {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
};

void check_unit(const Vec3& n) {
  const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(norm - 1.0) > 1e-9)
    throw std::domain_error("expected a unit direction vector");
}
}  // namespace

PauliCoeffs equilibrium_steady_state(double R, double tau_star_value, const Vec3& n) {
  check_unit(n);
  if (tau_star_value < -3.0 || tau_star_value > 1.0)
    throw std::domain_error("equilibrium_steady_state: tau_star outside [-3, 1]");
  const double denom = 3.0 + R * R;
  PauliCoeffs p;
  p.c[0][0] = 0.25;
  for (int i = 0; i < 3; ++i) {
    const double edge = -R / denom * (tau_star_value + 3.0) * n[i];
    p.c[0][i + 1] = 0.25 * edge;
    p.c[i + 1][0] = 0.25 * edge;
    for (int j = 0; j < 3; ++j) {
      double corr = R * R * (tau_star_value + 3.0) * n[i] * n[j];
      if (i == j) corr += tau_star_value - R * R;
      p.c[i + 1][j + 1] = 0.25 * corr / denom;
    }
  }
  return p;
}

Superoperator16 build_common_bath_liouvillian(const DissipationCoeffs& coeffs, const Vec3& n) {
  check_unit(n);
  Superoperator16 op = Superoperator16::Zero();
  for (int alpha = 0; alpha < 2; ++alpha) {
    for (int beta = 0; beta < 2; ++beta) {
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          std::complex<double> c(coeffs.C * n[i] * n[j], 0.0);
          if (i == j) c += coeffs.A;
          double eps = 0.0;
          for (int k = 0; k < 3; ++k) eps += kEps[i][j][k] * n[k];
          c += std::complex<double>(0.0, -coeffs.B * eps);
          if (c == 0.0) continue;
          const Matrix4cd si = alpha == 0 ? kron(sigma(i + 1), sigma(0))
                                          : kron(sigma(0), sigma(i + 1));
          const Matrix4cd sj = beta == 0 ? kron(sigma(j + 1), sigma(0))
                                         : kron(sigma(0), sigma(j + 1));
          op += dissipator_term(sj, si, 0.5 * c);
        }
      }
    }
  }
  return op;
}

PauliCoeffs transient_evolution(const PauliCoeffs& p0, double A, double B, double Omega,
                                double tau) {
  if (A <= 0.0) throw std::domain_error("transient_evolution: A must be positive");
  if (tau < 0.0) throw std::domain_error("transient_evolution: tau must be >= 0");
  const double e_full = std::exp(-A * tau);
  const double e_half = std::exp(-0.5 * A * tau);
  const double c = std::cos(Omega * tau);
  const double s = std::sin(Omega * tau);
  PauliCoeffs p;
  for (int j = 0; j < 4; ++j) {
    p.c[0][j] = p0.c[0][j];
    p.c[1][j] = e_half * (p0.c[1][j] * c - p0.c[2][j] * s);
    p.c[2][j] = e_half * (p0.c[1][j] * s + p0.c[2][j] * c);
    p.c[3][j] = p0.c[3][j] * e_full - (B / A) * p0.c[0][j] * (1.0 - e_full);
  }
  return p;
}

Superoperator16 build_single_coupled_liouvillian(double gamma_plus, double gamma_minus,
                                                 double omega) {
  const Matrix2cd lower = 0.5 * (sigma(1) - std::complex<double>(0, 1) * sigma(2));
  const Matrix2cd raise = lower.adjoint();
  const Matrix4cd sm = kron(lower, sigma(0));
  const Matrix4cd sp = kron(raise, sigma(0));
  const Matrix4cd h = 0.5 * omega * kron(sigma(3), sigma(0));
  Superoperator16 op = commutator_generator(h);
  op += dissipator_term(sm, sm, 0.5 * gamma_minus);
  op += dissipator_term(sp, sp, 0.5 * gamma_plus);
  return op;
}

}  // namespace kerrqc
