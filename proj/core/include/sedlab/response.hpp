#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedlab/fieldgen.hpp"
#include "sedlab/model.hpp"
#include "sedlab/quadrature.hpp"
#include "sedlab/spectra.hpp"

namespace sedlab {

// Thrown when an integration scheme detects a runaway (energy growth with no
// bath) or a statistic cannot be produced.
class NumericalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Damping term in the linear response denominator:
//   cubic_frequency:   chi(w) = 1 / (w0^2 - w^2 - i tau w^3)
//   linear_lorentzian: chi(w) = 1 / (w0^2 - w^2 - i gamma w)
// The cubic form is the stationary branch of the radiation-reaction equation
// of motion; the Lorentzian form is its near-resonance surrogate.
enum class DampingModel { cubic_frequency, linear_lorentzian };

std::complex<double> susceptibility(
    double omega, const OscillatorParams& p,
    DampingModel model = DampingModel::cubic_frequency);

struct CNumberState {
  double q = 0.0;
  double p = 0.0;  // m dq/dt
};

// Stationary (transient-free) response to the ensemble's field:
//   q_c(t) = (e/m) sum_j a_j Re[ chi(w_j) e^{-i(w_j t + phase_j)} ],
// phase convention matched to ModeEnsemble::field_at so the damped equation
// of motion holds mode by mode. Requires e != 0: an uncharged oscillator has
// no stationary driven solution, only free coherent oscillation.
CNumberState stationary_state(const ModeEnsemble& ens,
                              const OscillatorParams& p, double t,
                              DampingModel model = DampingModel::cubic_frequency);
double stationary_position(const ModeEnsemble& ens, const OscillatorParams& p,
                           double t,
                           DampingModel model = DampingModel::cubic_frequency);

// Integrand family for the stationary variance and related spectral
// integrals:
//   sharp_peak:    the numerator is frozen at the resonance and the
//                  denominator reduced to 4 w0^2 (w - w0)^2 + gamma^2 w0^2;
//                  integrates in closed form to the arctan expressions.
//   cubic_damping: the unreduced integrand with the tau^2 w^6 damping term.
// The zero-point integral differs between the two by O(gamma log(1/gamma)) --
// the cubic form's acausal high-frequency plateau -- so the sharp_peak route
// is the one the closed forms (and the commutator value hbar) correspond to.
enum class ResponseIntegrand { sharp_peak, cubic_damping };

struct VarianceSpec {
  QuadratureSpec quad{};
  double omega_max = 0.0;  // 0 -> bath default (GridSpec::resolved_omega_max)
  ResponseIntegrand zero_point_route = ResponseIntegrand::sharp_peak;
  ResponseIntegrand thermal_route = ResponseIntegrand::cubic_damping;
  bool analytic_tail = true;  // add the closed tail beyond the last node
};

// <q_c^2> by adaptive quadrature of the bath-weighted response integral, in
// units hbar/(m w0). The interval is split around the resonance; the
// remainder beyond omega_max is added in closed form. Throws QuadratureError
// on non-convergence.
double variance_quadrature(const SpectrumKind& kind, const ReducedParams& r,
                           const VarianceSpec& spec = {});

// Closed forms, units hbar/(m w0):
//   zero-point: (1/2pi) [pi/2 + arctan(2 w0/gamma)]
//   thermal:    (e^{1/theta} - 1)^{-1} [1 - x/pi + x^3/(3 pi)], x = gamma/2w0
//   combined:   their sum
double variance_closed_form(const SpectrumKind& kind, const ReducedParams& r);
// Same closed forms evaluated directly from physical constants (returns
// length^2); used to pin the reduced-unit scaling.
double variance_closed_form(const SpectrumKind& kind,
                            const OscillatorParams& p, double temperature);

// Partial sums of the zero-point expansion
//   (1/2)[1 - x/pi + x^3/(3 pi) - x^5/(5 pi)], x = gamma/2w0,
// with `order` correction terms (0..3). Requires gamma_ratio < 1.
double variance_series(const ReducedParams& r, int order);

enum class Scheme { rk4, heun };

struct IntegrationSpec {
  double t_end = 100.0;
  double dt = 0.0;  // 0 -> 2pi/(100 max w); must be <= 2pi/(50 max w)
  double q0 = 0.0;
  double p0 = 0.0;
  Scheme scheme = Scheme::rk4;
  double transient_damping_times = 10.0;
  std::size_t store_stride = 1;
};

// Sampled c-number trajectory. stationary_begin indexes the first sample
// past the discarded transient (0 when gamma = 0).
struct Trajectory {
  std::vector<double> times, q, p;
  std::uint64_t ensemble_seed = 0;
  double dt = 0.0;
  std::size_t stationary_begin = 0;
  std::string scheme;

  double mean_square_q(std::size_t from) const;
  void write_csv(std::ostream& os) const;  // columns: t,q,p
};

// Integrates the order-reduced radiation-reaction equation
//   q'' + gamma q' + w0^2 q = (e/m) [E(t) + tau dE/dt]
// (the third-derivative self-force replaced by its first-order-in-tau
// substitution, which keeps the stationary branch and removes runaways).
Trajectory integrate_trajectory(const ModeEnsemble& ens,
                                const OscillatorParams& p,
                                const IntegrationSpec& spec);

}  // namespace sedlab
