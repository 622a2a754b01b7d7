#include "kerrqc/bath_spectrum.hpp"

#include <cmath>

namespace kerrqc {

double wightman_fourier(const BathSpectrum& spec, double omega) {
  if (spec.kind == VacuumKind::Boulware) return 0.0;
  const double kr = spec.kappa_r;
  if (kr == 0.0) {
    if (omega > 0.0) return omega / (2.0 * M_PI);
    return 0.0;
  }
  if (omega == 0.0) return kr / (4.0 * M_PI * M_PI);
  const double x = 2.0 * M_PI * omega / kr;
  // 1 - e^{-x} via expm1 keeps the omega -> 0 limit accurate.
  const double denom = -std::expm1(-x);
  return omega / (2.0 * M_PI) / denom;
}

DissipationCoeffs dissipation_coeffs(const BathSpectrum& spec, double omega, double mu) {
  if (omega <= 0.0) throw std::domain_error("dissipation_coeffs: omega must be positive");
  if (mu <= 0.0) throw std::domain_error("dissipation_coeffs: mu must be positive");
  if (spec.kind == VacuumKind::Boulware)
    throw std::domain_error("dissipation_coeffs: no dissipation: R undefined");

  const double g_plus = wightman_fourier(spec, omega);
  const double g_minus = wightman_fourier(spec, -omega);
  DissipationCoeffs c;
  c.mu = mu;
  c.A = mu * mu / 4.0 * (g_plus + g_minus);
  c.B = mu * mu / 4.0 * (g_plus - g_minus);
  c.C = wightman_fourier(spec, 0.0) - c.A;
  c.R = spec.kappa_r > 0.0 ? std::tanh(M_PI * omega / spec.kappa_r) : 1.0;
  c.gamma_minus = 2.0 * M_PI * mu * mu * g_plus;
  c.gamma_plus = 2.0 * M_PI * mu * mu * g_minus;
  return c;
}

}  // namespace kerrqc
