// Test-only numerical oracles, kept independent of the library code paths
// they are used to check.
#ifndef KERRQC_TESTS_ORACLES_HPP
#define KERRQC_TESTS_ORACLES_HPP

#include <cmath>
#include <random>

#include "kerrqc/measures.hpp"
#include "kerrqc/pauli.hpp"
#include "kerrqc/superoperator.hpp"

namespace kerrqc::oracles {

/// Classical fixed-step 4th-order integration of d rho/dt = L rho.
inline Matrix4cd rk4_propagate(const Superoperator16& gen, const Matrix4cd& rho0,
                               double t_total, int steps) {
  Vector16cd y = vectorize(rho0);
  const double h = t_total / steps;
  for (int i = 0; i < steps; ++i) {
    const Vector16cd k1 = gen * y;
    const Vector16cd k2 = gen * (y + 0.5 * h * k1);
    const Vector16cd k3 = gen * (y + 0.5 * h * k2);
    const Vector16cd k4 = gen * (y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return unvectorize(y);
}

/// Wootters concurrence through the Hermitian square-root route
/// sqrt(sqrt(rho) rho~ sqrt(rho)), a different algebra than the library's
/// eigenvalue computation on rho rho~.
inline double wootters_concurrence(const Matrix4cd& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho);
  Matrix4cd sqrt_rho = Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) {
    const double ev = std::max(0.0, es.eigenvalues()(i));
    sqrt_rho += std::sqrt(ev) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  }
  const Matrix4cd yy = sigma2(2, 2);
  const Matrix4cd tilde = yy * rho.conjugate() * yy;
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es2(Matrix4cd(sqrt_rho * tilde * sqrt_rho));
  std::array<double, 4> lam;
  for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(0.0, es2.eigenvalues()(i)));
  // ascending order from the solver
  return std::max(0.0, lam[3] - lam[2] - lam[1] - lam[0]);
}

/// Exhaustive projective-measurement minimization for the classical
/// correlation (measurement on qubit B over a direction grid).
inline double discord_measurement_grid(const Matrix4cd& rho, int n_theta = 100,
                                       int n_phi = 100) {
  const double s_a = vn_entropy(partial_trace_B(rho));
  const double mi = mutual_information(rho);
  double min_cond = 1e300;
  for (int it = 0; it <= n_theta; ++it) {
    const double th = M_PI * it / n_theta;
    for (int ip = 0; ip < n_phi; ++ip) {
      const double ph = 2.0 * M_PI * ip / n_phi;
      const double n1 = std::sin(th) * std::cos(ph);
      const double n2 = std::sin(th) * std::sin(ph);
      const double n3 = std::cos(th);
      const Matrix2cd proj_up =
          0.5 * (sigma(0) + n1 * sigma(1) + n2 * sigma(2) + n3 * sigma(3));
      double cond = 0.0;
      for (int outcome = 0; outcome < 2; ++outcome) {
        const Matrix2cd p = outcome == 0 ? proj_up : Matrix2cd(sigma(0) - proj_up);
        const Matrix4cd sel = Matrix4cd(kron(sigma(0), p)) * rho * kron(sigma(0), p);
        const double prob = sel.trace().real();
        if (prob < 1e-14) continue;
        cond += prob * vn_entropy(Eigen::MatrixXcd(partial_trace_B(sel) / prob));
      }
      min_cond = std::min(min_cond, cond);
    }
  }
  return mi - (s_a - min_cond);
}

/// Deterministic random Hermitian unit-trace PSD matrix (Wishart-style).
inline Matrix4cd random_density(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Matrix4cd g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Matrix4cd rho = g * g.adjoint();
  return rho / rho.trace();
}

/// Random Hermitian (not necessarily positive) with unit trace.
inline Matrix4cd random_hermitian_unit_trace(std::mt19937& rng) {
  std::normal_distribution<double> gauss;
  Matrix4cd g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Matrix4cd h = 0.5 * (g + g.adjoint());
  h -= (h.trace() - 1.0) / 4.0 * Matrix4cd::Identity();
  return h;
}

/// Random X-shaped density matrix: populations plus anti-diagonal coherences
/// bounded so the state stays PSD.
inline Matrix4cd random_x_state(std::mt19937& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::Vector4d p;
  for (int i = 0; i < 4; ++i) p(i) = uni(rng) + 1e-6;
  p /= p.sum();
  const double phase14 = 2.0 * M_PI * uni(rng);
  const double phase23 = 2.0 * M_PI * uni(rng);
  const double m14 = uni(rng) * std::sqrt(p(0) * p(3));
  const double m23 = uni(rng) * std::sqrt(p(1) * p(2));
  Matrix4cd rho = Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i) rho(i, i) = p(i);
  rho(0, 3) = std::polar(m14, phase14);
  rho(3, 0) = std::conj(rho(0, 3));
  rho(1, 2) = std::polar(m23, phase23);
  rho(2, 1) = std::conj(rho(1, 2));
  return rho;
}

inline double central_difference(const std::function<double(double)>& f, double x,
                                 double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace kerrqc::oracles

#endif
