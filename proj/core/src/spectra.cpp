#include "sedlab/spectra.hpp"

#include <cmath>
#include <numbers>

namespace sedlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

SpectrumKind SpectrumKind::thermal(double theta) {
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("SpectrumKind::thermal: theta must be >= 0");
  }
  return {BathKind::thermal, theta};
}

SpectrumKind SpectrumKind::combined(double theta) {
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("SpectrumKind::combined: theta must be >= 0");
  }
  return {BathKind::zero_point_plus_thermal, theta};
}

std::string SpectrumKind::name() const {
  switch (bath) {
    case BathKind::zero_point:
      return "zero-point";
    case BathKind::thermal:
      return "thermal";
    case BathKind::zero_point_plus_thermal:
      return "zero-point+thermal";
  }
  return "unknown";
}

SpectrumKind SpectrumKind::parse(const std::string& name, double theta) {
  if (name == "zero-point" || name == "zp") return zero_point();
  if (name == "thermal") return thermal(theta);
  if (name == "zero-point+thermal" || name == "combined") {
    return combined(theta);
  }
  throw std::invalid_argument("unknown spectrum kind: " + name);
}

double coth_minus_one(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("coth_minus_one: x must be > 0");
  }
  return 2.0 / std::expm1(2.0 * x);  // underflows cleanly to 0 for large x
}

double coth_stable(double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("coth_stable: x must be > 0");
  }
  if (x <= 1e-8) return 1.0 / x + x / 3.0;
  return 1.0 + coth_minus_one(x);
}

double zero_point_density(double omega, const OscillatorParams& p) {
  if (!(omega >= 0.0)) {
    throw std::invalid_argument("zero_point_density: omega must be >= 0");
  }
  const double c3 = std::pow(p.light_speed, 3);
  return p.hbar * omega * omega * omega / (2.0 * kPi * kPi * c3);
}

double thermal_density(double omega, double theta,
                       const OscillatorParams& p) {
  if (!(omega >= 0.0)) {
    throw std::invalid_argument("thermal_density: omega must be >= 0");
  }
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("thermal_density: theta must be >= 0");
  }
  if (omega == 0.0 || theta == 0.0) return 0.0;  // w^3 zero beats the 1/w pole
  const double c3 = std::pow(p.light_speed, 3);
  // hbar w / kT = w / (theta omega0)
  const double x = omega / (theta * p.natural_frequency);
  return p.hbar * omega * omega * omega / (kPi * kPi * c3) / std::expm1(x);
}

double thermal_amplitude(double omega, double theta,
                         const OscillatorParams& p) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("thermal_amplitude: omega must be > 0");
  }
  if (!(theta >= 0.0)) {
    throw std::invalid_argument("thermal_amplitude: theta must be >= 0");
  }
  if (theta == 0.0) return 0.0;
  const double x = 0.5 * omega / (theta * p.natural_frequency);
  return std::sqrt(0.5 * p.hbar * omega * coth_minus_one(x));
}

double effective_field_psd(double omega, const SpectrumKind& kind,
                           const OscillatorParams& p) {
  if (!(omega >= 0.0)) {
    throw std::invalid_argument("effective_field_psd: omega must be >= 0");
  }
  const double c3 = std::pow(p.light_speed, 3);
  const double zp = 2.0 * p.hbar * omega * omega * omega / (3.0 * kPi * c3);
  switch (kind.bath) {
    case BathKind::zero_point:
      return zp;
    case BathKind::thermal: {
      if (kind.theta == 0.0 || omega == 0.0) return 0.0;
      const double x = 0.5 * omega / (kind.theta * p.natural_frequency);
      return zp * coth_minus_one(x);
    }
    case BathKind::zero_point_plus_thermal: {
      if (kind.theta == 0.0 || omega == 0.0) return zp;
      const double x = 0.5 * omega / (kind.theta * p.natural_frequency);
      return zp * coth_stable(x);
    }
  }
  return 0.0;
}

}  // namespace sedlab
