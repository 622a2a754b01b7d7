#ifndef KERRQC_BATH_SPECTRUM_HPP
#define KERRQC_BATH_SPECTRUM_HPP

#include <stdexcept>

namespace kerrqc {

enum class VacuumKind { Boulware, Unruh };

/// Field state seen by a near-horizon detector. kappa_r is the local
/// acceleration at the detector location; it only matters for the Unruh kind.
struct BathSpectrum {
  VacuumKind kind;
  double kappa_r;

  BathSpectrum(VacuumKind k, double kr) : kind(k), kappa_r(kr) {
    if (kr < 0.0) throw std::domain_error("BathSpectrum: kappa_r must be >= 0");
  }
};

/// Fourier transform of the Wightman function with respect to proper time.
/// Boulware: identically 0. Unruh: omega/(2 pi) / (1 - exp(-2 pi omega / kappa_r)),
/// with the continuous limit kappa_r/(4 pi^2) at omega = 0 and the
/// zero-temperature limits omega/(2 pi) (omega > 0) and 0 (omega < 0) at kappa_r = 0.
double wightman_fourier(const BathSpectrum& spec, double omega);

/// Kossakowski scalars and one-qubit rates for a detector with gap omega,
/// coupling mu, in the given bath.
///   A = mu^2/4 (G(w) + G(-w)),  B = mu^2/4 (G(w) - G(-w)),  C = G(0) - A,
///   R = B/A = tanh(pi w / kappa_r),
///   gamma_minus = 2 pi mu^2 G(w)   (emission),
///   gamma_plus  = 2 pi mu^2 G(-w)  (absorption).
struct DissipationCoeffs {
  double A;
  double B;
  double C;
  double R;
  double gamma_plus;
  double gamma_minus;
  double mu;
};

DissipationCoeffs dissipation_coeffs(const BathSpectrum& spec, double omega, double mu);

}  // namespace kerrqc

#endif
