#ifndef KERRQC_KERR_GEOMETRY_HPP
#define KERRQC_KERR_GEOMETRY_HPP

#include <stdexcept>

namespace kerrqc {

/// Kerr black hole in geometric units (G = c = hbar = k_B = 1).
/// spin is the angular momentum per unit mass a, restricted to 0 <= a <= M.
struct BlackHoleParams {
  double mass;
  double spin;

  BlackHoleParams(double mass_, double spin_) : mass(mass_), spin(spin_) {
    if (mass <= 0.0) throw std::domain_error("BlackHoleParams: mass must be positive");
    if (spin < 0.0) throw std::domain_error("BlackHoleParams: spin must be non-negative");
    if (spin > mass) throw std::domain_error("BlackHoleParams: naked singularity (spin > mass)");
  }

  bool extremal() const { return spin == mass; }
};

/// Horizon radii and the scalars attached to the outer horizon.
struct HorizonData {
  double r_plus;      // M + sqrt(M^2 - a^2)
  double r_minus;     // M - sqrt(M^2 - a^2)
  double kappa;       // surface gravity (r+ - r-) / (2 (r+^2 + a^2))
  double omega_plus;  // horizon angular speed a / (r+^2 + a^2)
  bool extremal;
};

/// Detector sits at r = radial_factor * r_plus, strictly outside the horizon.
struct DetectorPosition {
  double radial_factor;

  explicit DetectorPosition(double factor) : radial_factor(factor) {
    if (factor <= 1.0)
      throw std::domain_error("DetectorPosition: radial_factor must exceed 1");
  }
};

HorizonData horizons(const BlackHoleParams& bh);

/// F(r) = (r - r+)(r - r-) / (r^2 + a^2). Zero on the horizon, -> 1 at infinity.
/// Negative inside the horizon; callers guard.
double metric_function(const BlackHoleParams& bh, double r);

/// Local acceleration kappa_r = kappa / sqrt(F(r)) at the detector position.
/// Returns 0 for an extremal hole.
double local_acceleration(const BlackHoleParams& bh, const DetectorPosition& pos);

/// Effective detector temperature kappa_r / (2 pi).
double effective_temperature(const BlackHoleParams& bh, const DetectorPosition& pos);

/// Closed-form tortoise coordinate, integration constant fixed to 0:
///   r* = r + (r+^2+a^2)/(r+ - r-) ln(r - r+) - (r-^2+a^2)/(r+ - r-) ln(r - r-)
/// Requires r > r_plus and a non-extremal hole.
double tortoise(const BlackHoleParams& bh, double r);

/// Spring-constant surface gravity kappa_Kerr = 1/(4M) - M Omega_+^2.
double kerr_spring_gravity(const BlackHoleParams& bh);

}  // namespace kerrqc

#endif
