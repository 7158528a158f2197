#include "sedlab/model.hpp"

#include <stdexcept>

namespace sedlab {

OscillatorParams::OscillatorParams(double m, double omega0, double e,
                                   double hbar_, double c, double k,
                                   double validity_bound)
    : mass(m),
      natural_frequency(omega0),
      charge(e),
      hbar(hbar_),
      light_speed(c),
      boltzmann(k) {
  if (!(mass > 0.0) || !(natural_frequency > 0.0) || !(hbar > 0.0) ||
      !(light_speed > 0.0) || !(boltzmann > 0.0)) {
    throw std::invalid_argument(
        "OscillatorParams: mass, frequency, hbar, c and k must be positive");
  }
  if (!std::isfinite(charge)) {
    throw std::invalid_argument("OscillatorParams: charge must be finite");
  }
  nonrelativistic = damping_ratio() < validity_bound;
}

OscillatorParams OscillatorParams::reduced_units(double gamma_ratio,
                                                 double validity_bound) {
  if (!(gamma_ratio >= 0.0)) {
    throw std::invalid_argument("reduced_units: gamma_ratio must be >= 0");
  }
  const double e = std::sqrt(1.5 * gamma_ratio);
  return OscillatorParams(1.0, 1.0, e, 1.0, 1.0, 1.0, validity_bound);
}

ReducedParams::ReducedParams(double gamma_ratio_, double theta_)
    : gamma_ratio(gamma_ratio_), theta(theta_) {
  if (!(gamma_ratio >= 0.0)) {
    throw std::invalid_argument("ReducedParams: gamma_ratio must be >= 0");
  }
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("ReducedParams: theta must be >= 0");
  }
}

ReducedParams reduce(const OscillatorParams& p, double temperature) {
  if (!(temperature >= 0.0)) {
    throw std::invalid_argument("reduce: temperature must be >= 0");
  }
  const double theta =
      p.boltzmann * temperature / (p.hbar * p.natural_frequency);
  return ReducedParams(p.damping_ratio(), theta);
}

OscillatorParams restore(const ReducedParams& r,
                         const OscillatorParams& reference) {
  // gamma_ratio = 2 e^2 omega0 / (3 m c^3)  =>  e^2 = 3 m c^3 gamma_ratio / (2 omega0)
  const double e2 = 1.5 * reference.mass *
                    std::pow(reference.light_speed, 3) * r.gamma_ratio /
                    reference.natural_frequency;
  return OscillatorParams(reference.mass, reference.natural_frequency,
                          std::sqrt(e2), reference.hbar, reference.light_speed,
                          reference.boltzmann);
}

double restore_temperature(const ReducedParams& r,
                           const OscillatorParams& reference) {
  return r.theta * reference.hbar * reference.natural_frequency /
         reference.boltzmann;
}

}  // namespace sedlab
