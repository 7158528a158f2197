#pragma once

#include <stdexcept>
#include <string>

#include "sedlab/model.hpp"

namespace sedlab {

enum class BathKind { zero_point, thermal, zero_point_plus_thermal };

// Which radiation bath drives the oscillator. theta = kT/(hbar omega0) is
// carried for the thermal variants; theta = 0 reduces the thermal bath to the
// zero spectrum.
struct SpectrumKind {
  BathKind bath = BathKind::zero_point;
  double theta = 0.0;

  static SpectrumKind zero_point() { return {BathKind::zero_point, 0.0}; }
  static SpectrumKind thermal(double theta);
  static SpectrumKind combined(double theta);

  bool has_zero_point() const { return bath != BathKind::thermal; }
  bool has_thermal() const { return bath != BathKind::zero_point; }

  std::string name() const;
  static SpectrumKind parse(const std::string& name, double theta);
};

// coth(x) for x > 0, split per the small-argument Laurent expansion
// 1/x + x/3 below 1e-8 and the identity coth(x) = 1 + 2/(e^{2x} - 1) above.
double coth_stable(double x);
// coth(x) - 1 = 2/(e^{2x} - 1), evaluated without cancellation.
double coth_minus_one(double x);

// Spectral energy density of the zero-point bath, hbar w^3 / (2 pi^2 c^3).
double zero_point_density(double omega, const OscillatorParams& p);

// Spectral energy density of the thermal (Planck) bath,
// (hbar w^3 / pi^2 c^3) / (e^{hbar w / kT} - 1); 0 at omega = 0 by
// continuous extension.
double thermal_density(double omega, double theta, const OscillatorParams& p);

// Per-mode thermal amplitude h(w,T) = sqrt((hbar w / 2)(coth(hbar w/2kT) - 1)).
double thermal_amplitude(double omega, double theta,
                         const OscillatorParams& p);

// One-sided power spectral density S_E(w) of the scalar driving field, fixed
// so that (e^2/m^2) Int S_E(w) |chi(w)|^2 dw reproduces the stationary
// position variance of the dipole-coupled oscillator. For each bath this is
// (4 pi / 3) times the spectral energy density:
//   zero-point:  2 hbar w^3 / (3 pi c^3)
//   thermal:     the same times (coth(hbar w/2kT) - 1)
//   combined:    the same times coth(hbar w/2kT)
double effective_field_psd(double omega, const SpectrumKind& kind,
                           const OscillatorParams& p);

}  // namespace sedlab
