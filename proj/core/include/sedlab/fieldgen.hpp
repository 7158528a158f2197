#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sedlab/model.hpp"
#include "sedlab/spectra.hpp"

namespace sedlab {

enum class GridStrategy { resonance_stratified, uniform };

// Frequency-grid recipe for discretizing a bath into modes. The stratified
// strategy spends `resonance_fraction` of the modes on a Lorentzian-quantile
// grid inside a window of +/- window_halfwidth_gammas * gamma around omega0
// and distributes the rest uniformly over the tails; with gamma_ratio <= 1e-2
// a uniform grid would waste nearly every mode off-resonance.
struct GridSpec {
  GridStrategy strategy = GridStrategy::resonance_stratified;
  std::size_t n_modes = 1024;
  double omega_max = 0.0;  // 0 -> bath default (see resolved_omega_max)
  double resonance_fraction = 0.7;
  double window_halfwidth_gammas = 20.0;

  // Bath defaults: 10 omega0 for zero-point runs, omega0 * max(10, 20 theta)
  // when a thermal component is present.
  double resolved_omega_max(const SpectrumKind& kind,
                            const OscillatorParams& p) const;
  std::string strategy_name() const;
};

struct Mode {
  double omega = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
};

// A finite random-phase realization of a radiation bath:
//   E(t) = sum_j a_j cos(w_j t + phase_j)
// Frequencies and amplitudes are deterministic functions of (kind, grid);
// the phases are the only random input, drawn i.i.d. uniform on [0, 2pi)
// from SplitMix64(seed). Amplitudes satisfy a_j^2 = 2 * Int_bin S_E(w) dw, so
// sum a_j^2 / 2 equals Int_0^omega_max S_E for any mode count. Immutable
// after creation.
class ModeEnsemble {
 public:
  static ModeEnsemble sample(const SpectrumKind& kind,
                             const OscillatorParams& p, const GridSpec& grid,
                             std::uint64_t seed);
  // Bespoke mode lists (toy baths, replay of external data).
  static ModeEnsemble from_modes(std::vector<Mode> modes, SpectrumKind kind,
                                 std::uint64_t seed);

  double field_at(double t) const;
  // Term-by-term antiderivative with zero integration constant:
  //   A(t) = -c sum_j (a_j / w_j) sin(w_j t + phase_j),
  // so that -(1/c) dA/dt reproduces field_at. Covers the bath part only;
  // the radiation-reaction part of the vector potential is reconstructed
  // from the trajectory by the caller. Rejects ensembles with w_j = 0.
  double vector_potential_at(double t, const OscillatorParams& p) const;

  // E and dE/dt on the uniform grid t0 + k*step, k = 0..n-1, evaluated with
  // per-mode rotating phasors (periodically resynchronized); this is what
  // makes long trajectory integrations affordable.
  void field_series(double t0, double step, std::span<double> field,
                    std::span<double> field_dot) const;

  std::size_t size() const { return omega_.size(); }
  std::span<const double> omegas() const { return omega_; }
  std::span<const double> amplitudes() const { return amp_; }
  std::span<const double> phases() const { return phase_; }
  const SpectrumKind& kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const GridSpec& grid() const { return grid_; }
  double max_omega() const { return omega_.empty() ? 0.0 : omega_.back(); }
  // sum a_j^2 / 2, the field variance carried by the ensemble.
  double total_power() const;

  std::string to_json_string() const;
  static ModeEnsemble from_json_string(const std::string& text);

 private:
  ModeEnsemble() = default;
  std::vector<double> omega_, amp_, phase_;
  SpectrumKind kind_{};
  std::uint64_t seed_ = 0;
  GridSpec grid_{};
};

// Spec-facing name for ModeEnsemble::sample. Fails (std::invalid_argument)
// when gamma > 0 and fewer than 10 modes land inside [w0 - 5 gamma,
// w0 + 5 gamma]: such a grid cannot resolve the resonance that carries
// essentially all of the response.
ModeEnsemble sample_modes(const SpectrumKind& kind, const OscillatorParams& p,
                          const GridSpec& grid, std::uint64_t seed);

}  // namespace sedlab
