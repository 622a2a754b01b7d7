#include "kerrqc/kerr_geometry.hpp"

#include <cmath>

namespace kerrqc {

HorizonData horizons(const BlackHoleParams& bh) {
  const double m = bh.mass;
  const double a = bh.spin;
  const double disc = std::sqrt(std::max(0.0, (m - a) * (m + a)));
  HorizonData h;
  h.r_plus = m + disc;
  h.r_minus = m - disc;
  h.kappa = (h.r_plus - h.r_minus) / (2.0 * (h.r_plus * h.r_plus + a * a));
  h.omega_plus = a / (h.r_plus * h.r_plus + a * a);
  h.extremal = bh.extremal();
  return h;
}

double metric_function(const BlackHoleParams& bh, double r) {
  if (r <= 0.0) throw std::domain_error("metric_function: r must be positive");
  const HorizonData h = horizons(bh);
  return (r - h.r_plus) * (r - h.r_minus) / (r * r + bh.spin * bh.spin);
}

double local_acceleration(const BlackHoleParams& bh, const DetectorPosition& pos) {
  const HorizonData h = horizons(bh);
  if (h.extremal) return 0.0;
  const double r = pos.radial_factor * h.r_plus;
  const double f = metric_function(bh, r);
  if (f <= 0.0) throw std::domain_error("local_acceleration: F(r) <= 0");
  return h.kappa / std::sqrt(f);
}

double effective_temperature(const BlackHoleParams& bh, const DetectorPosition& pos) {
  return local_acceleration(bh, pos) / (2.0 * M_PI);
}

double tortoise(const BlackHoleParams& bh, double r) {
  const HorizonData h = horizons(bh);
  if (h.extremal) throw std::domain_error("tortoise: undefined for extremal hole");
  if (r <= h.r_plus) throw std::domain_error("tortoise: requires r > r_plus");
  const double a2 = bh.spin * bh.spin;
  const double dr = h.r_plus - h.r_minus;
  return r + (h.r_plus * h.r_plus + a2) / dr * std::log(r - h.r_plus) -
         (h.r_minus * h.r_minus + a2) / dr * std::log(r - h.r_minus);
}

double kerr_spring_gravity(const BlackHoleParams& bh) {
  const HorizonData h = horizons(bh);
  return 1.0 / (4.0 * bh.mass) - bh.mass * h.omega_plus * h.omega_plus;
}

}  // namespace kerrqc
