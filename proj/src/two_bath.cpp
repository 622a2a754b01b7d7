#include "kerrqc/two_bath.hpp"

#include <cmath>

namespace kerrqc {

namespace {
// Bare basis ordering: e0 = |1,1>, e1 = |1,0>, e2 = |0,1>, e3 = |0,0>,
// with |1> the excited single-qubit state (sigma_z = +1).
Matrix4cd outer(const Eigen::Vector4cd& ket, const Eigen::Vector4cd& bra) {
  return ket * bra.adjoint();
}
}  // namespace

Matrix4cd TwoQubitHamiltonian::matrix() const {
  const Matrix2cd lower = 0.5 * (sigma(1) - std::complex<double>(0, 1) * sigma(2));
  const Matrix2cd raise = lower.adjoint();
  Matrix4cd h = 0.5 * omega1 * kron(sigma(3), sigma(0)) +
                0.5 * omega2 * kron(sigma(0), sigma(3));
  h += coupling * (kron(raise, lower) + kron(lower, raise));
  return h;
}

EigenStructure eigen_structure(const TwoQubitHamiltonian& h) {
  if (h.coupling == 0.0 && h.symmetric())
    throw std::domain_error("eigen_structure: degenerate (K = 0 and equal gaps)");
  EigenStructure es;
  es.kappa_mix = std::sqrt(h.coupling * h.coupling +
                           0.25 * (h.omega1 - h.omega2) * (h.omega1 - h.omega2));
  es.theta = std::atan2(2.0 * h.coupling, h.omega1 - h.omega2);
  const double esum = 0.5 * (h.omega1 + h.omega2);
  es.energy = {-esum, esum, es.kappa_mix, -es.kappa_mix};
  es.omega_big1 = esum - es.kappa_mix;
  es.omega_big2 = esum + es.kappa_mix;

  const double c = std::cos(0.5 * es.theta);
  const double s = std::sin(0.5 * es.theta);
  es.state[0] = Eigen::Vector4cd(0, 0, 0, 1);  // |0,0>
  es.state[1] = Eigen::Vector4cd(1, 0, 0, 0);  // |1,1>
  es.state[2] = Eigen::Vector4cd(0, c, s, 0);  // cos|1,0> + sin|0,1>
  es.state[3] = Eigen::Vector4cd(0, -s, c, 0);
  return es;
}

TransitionOps transition_ops(const EigenStructure& es) {
  const double c = std::cos(0.5 * es.theta);
  const double s = std::sin(0.5 * es.theta);
  const auto& l = es.state;
  TransitionOps ops;
  ops.freq = {es.omega_big2, es.omega_big1};
  ops.v[0][0] = c * (outer(l[0], l[2]) + outer(l[3], l[1]));
  ops.v[0][1] = s * (outer(l[2], l[1]) - outer(l[0], l[3]));
  ops.v[1][0] = s * (outer(l[0], l[2]) - outer(l[3], l[1]));
  ops.v[1][1] = c * (outer(l[2], l[1]) + outer(l[0], l[3]));
  return ops;
}

Superoperator16 two_bath_dissipator(const EigenStructure& es, const TransitionOps& ops,
                                    const BathSpectrum& spec, int j, double mu) {
  (void)es;
  Superoperator16 out = Superoperator16::Zero();
  const double mu2 = mu * mu;
  for (int ch = 0; ch < 2; ++ch) {
    const Matrix4cd& v = ops.v[j][ch];
    const Matrix4cd vdag = v.adjoint();
    const double down = mu2 * wightman_fourier(spec, ops.freq[ch]);
    const double up = mu2 * wightman_fourier(spec, -ops.freq[ch]);
    if (down != 0.0) out += dissipator_term(v, v, down);
    if (up != 0.0) out += dissipator_term(vdag, vdag, up);
  }
  return out;
}

Superoperator16 build_two_bath_liouvillian(const EigenStructure& es, const TransitionOps& ops,
                                           const BathSpectrum& spec1, const BathSpectrum& spec2,
                                           double mu) {
  Matrix4cd h = Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) h += es.energy[k] * outer(es.state[k], es.state[k]);
  Superoperator16 op = commutator_generator(h);
  op += two_bath_dissipator(es, ops, spec1, 0, mu);
  op += two_bath_dissipator(es, ops, spec2, 1, mu);
  return op;
}

std::array<double, 4> neq_steady_populations(const EigenStructure& es,
                                             const BathSpectrum& spec1,
                                             const BathSpectrum& spec2) {
  const double c2 = std::pow(std::cos(0.5 * es.theta), 2);
  const double s2 = std::pow(std::sin(0.5 * es.theta), 2);
  // Per-channel bath-summed rates; the overall 2 mu^2 factor cancels.
  const double down2 = c2 * wightman_fourier(spec1, es.omega_big2) +
                       s2 * wightman_fourier(spec2, es.omega_big2);
  const double up2 = c2 * wightman_fourier(spec1, -es.omega_big2) +
                     s2 * wightman_fourier(spec2, -es.omega_big2);
  const double down1 = s2 * wightman_fourier(spec1, es.omega_big1) +
                       c2 * wightman_fourier(spec2, es.omega_big1);
  const double up1 = s2 * wightman_fourier(spec1, -es.omega_big1) +
                     c2 * wightman_fourier(spec2, -es.omega_big1);
  const double x = down2 + up2;
  const double y = down1 + up1;
  if (x == 0.0 || y == 0.0)
    throw std::domain_error("neq_steady_populations: degenerate bath (vanishing spectrum)");
  return {down2 * down1 / (x * y), up2 * up1 / (x * y), up2 * down1 / (x * y),
          down2 * up1 / (x * y)};
}

Matrix4cd neq_steady_state_closed_form(const EigenStructure& es, const BathSpectrum& spec1,
                                       const BathSpectrum& spec2) {
  const auto p = neq_steady_populations(es, spec1, spec2);
  Matrix4cd rho = Matrix4cd::Zero();
  for (int k = 0; k < 4; ++k) rho += p[k] * outer(es.state[k], es.state[k]);
  return rho;
}

double flux(const Superoperator16& dissipator, const Matrix4cd& rho_ss,
            const TwoQubitHamiltonian& h) {
  return (apply(dissipator, rho_ss) * h.matrix()).trace().real();
}

FluxReport two_bath_flux(const EigenStructure& es, const TransitionOps& ops,
                         const BathSpectrum& spec1, const BathSpectrum& spec2, double mu,
                         const TwoQubitHamiltonian& h, const Matrix4cd& rho_ss) {
  const Superoperator16 d1 = two_bath_dissipator(es, ops, spec1, 0, mu);
  const Superoperator16 d2 = two_bath_dissipator(es, ops, spec2, 1, mu);
  const Superoperator16 full =
      Superoperator16(commutator_generator(h.matrix()) + d1 + d2);
  FluxReport rep;
  rep.into_system_1 = flux(d1, rho_ss, h);
  rep.into_system_2 = flux(d2, rho_ss, h);
  rep.steady = apply(full, rho_ss).norm() <= 1e-8;
  return rep;
}

}  // namespace kerrqc
