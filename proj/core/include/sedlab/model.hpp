#pragma once

#include <cmath>

namespace sedlab {

// Physical parameters of a charged harmonic oscillator coupled to radiation,
// in Gaussian units. Immutable after construction; the constructor validates
// positivity and records whether the weak-damping (nonrelativistic) regime
// gamma/omega0 < validity_bound holds.
struct OscillatorParams {
  double mass = 1.0;
  double natural_frequency = 1.0;
  double charge = 0.0;
  double hbar = 1.0;
  double light_speed = 1.0;
  double boltzmann = 1.0;
  bool nonrelativistic = true;

  OscillatorParams() = default;
  OscillatorParams(double m, double omega0, double e, double hbar_, double c,
                   double k, double validity_bound = 1e-2);

  // Convenience factory for the internal unit system hbar = m = omega0 = c =
  // k = 1, with the charge chosen so that gamma/omega0 equals `gamma_ratio`
  // (e^2 = 3 c^3 m gamma_ratio / (2 omega0)). Desk-scale experiments set the
  // damping ratio directly instead of guessing atomic constants.
  static OscillatorParams reduced_units(double gamma_ratio,
                                        double validity_bound = 1e-2);

  // tau = 2 e^2 / (3 m c^3), the radiation-reaction timescale.
  double damping_time() const {
    return 2.0 * charge * charge / (3.0 * mass * std::pow(light_speed, 3));
  }
  // gamma = tau * omega0^2, the energy decay rate of the oscillator.
  double damping_rate() const {
    return damping_time() * natural_frequency * natural_frequency;
  }
  // gamma / omega0, the dimensionless damping ratio.
  double damping_ratio() const { return damping_time() * natural_frequency; }

  // hbar / (m omega0): the scale carrying position variances back to
  // physical units.
  double variance_scale() const {
    return hbar / (mass * natural_frequency);
  }
};

// Dimensionless parameters that fully determine every stationary statistic:
// gamma_ratio = gamma/omega0 and theta = kT/(hbar omega0).
struct ReducedParams {
  double gamma_ratio = 0.0;
  double theta = 0.0;

  ReducedParams() = default;
  ReducedParams(double gamma_ratio_, double theta_);
};

// Nondimensionalize: gamma_ratio from the charge, theta from the temperature.
// Rejects negative temperature.
ReducedParams reduce(const OscillatorParams& p, double temperature);

// Inverse of reduce up to the reference scales: keeps mass, frequency and the
// fundamental constants of `reference` and re-derives the charge from
// gamma_ratio.
OscillatorParams restore(const ReducedParams& r,
                         const OscillatorParams& reference);

// The temperature that reduce() would map to r.theta under `reference`.
double restore_temperature(const ReducedParams& r,
                           const OscillatorParams& reference);

}  // namespace sedlab
