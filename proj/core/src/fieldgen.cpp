#include "sedlab/fieldgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "json.hpp"
#include "sedlab/quadrature.hpp"
#include "sedlab/rng.hpp"

namespace sedlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Lorentzian CDF around omega0 with half-width gamma/2, used as the quantile
// map for the stratified grid.
double lorentz_cdf(double omega, double omega0, double gamma) {
  return 0.5 + std::atan(2.0 * (omega - omega0) / gamma) / kPi;
}
double lorentz_quantile(double u, double omega0, double gamma) {
  return omega0 + 0.5 * gamma * std::tan(kPi * (u - 0.5));
}

// Bin edges over [0, omega_max]; modes sit at bin midpoints (in the mapped
// coordinate for the resonance block).
struct GridBins {
  std::vector<double> edges;
  std::vector<double> centers;
};

GridBins build_bins(const GridSpec& grid, const OscillatorParams& p,
                    double omega_max) {
  const std::size_t n = grid.n_modes;
  if (n < 2) {
    throw std::invalid_argument("sample_modes: need n_modes >= 2");
  }
  if (!(omega_max > 0.0)) {
    throw std::invalid_argument("sample_modes: omega_max must be > 0");
  }
  const double gamma = p.damping_rate();
  const double omega0 = p.natural_frequency;

  GridBins bins;
  bins.edges.reserve(n + 1);
  bins.centers.reserve(n);

  const bool stratified = grid.strategy == GridStrategy::resonance_stratified &&
                          gamma > 0.0 && n >= 8 && omega_max > omega0;
  if (!stratified) {
    for (std::size_t i = 0; i <= n; ++i) {
      bins.edges.push_back(omega_max * static_cast<double>(i) / n);
    }
    for (std::size_t i = 0; i < n; ++i) {
      bins.centers.push_back(0.5 * (bins.edges[i] + bins.edges[i + 1]));
    }
    return bins;
  }

  double w = grid.window_halfwidth_gammas * gamma;
  w = std::min({w, 0.45 * omega0, 0.45 * (omega_max - omega0)});
  if (!(w > 0.0)) {
    throw std::invalid_argument("sample_modes: degenerate resonance window");
  }

  auto n_res = static_cast<std::size_t>(
      std::lround(grid.resonance_fraction * static_cast<double>(n)));
  n_res = std::clamp<std::size_t>(n_res, 1, n - 2);
  const std::size_t n_tail = n - n_res;
  const double lo_len = omega0 - w;
  const double hi_len = omega_max - omega0 - w;
  auto n_lo = static_cast<std::size_t>(
      std::lround(static_cast<double>(n_tail) * lo_len / (lo_len + hi_len)));
  n_lo = std::clamp<std::size_t>(n_lo, 1, n_tail - 1);
  const std::size_t n_hi = n_tail - n_lo;

  for (std::size_t i = 0; i < n_lo; ++i) {
    bins.edges.push_back(lo_len * static_cast<double>(i) / n_lo);
    bins.centers.push_back(lo_len * (static_cast<double>(i) + 0.5) / n_lo);
  }
  const double u_lo = lorentz_cdf(omega0 - w, omega0, gamma);
  const double u_hi = lorentz_cdf(omega0 + w, omega0, gamma);
  for (std::size_t i = 0; i < n_res; ++i) {
    const double ue = u_lo + (u_hi - u_lo) * static_cast<double>(i) / n_res;
    const double uc =
        u_lo + (u_hi - u_lo) * (static_cast<double>(i) + 0.5) / n_res;
    bins.edges.push_back(lorentz_quantile(ue, omega0, gamma));
    bins.centers.push_back(lorentz_quantile(uc, omega0, gamma));
  }
  for (std::size_t i = 0; i < n_hi; ++i) {
    const double e = omega0 + w + hi_len * static_cast<double>(i) / n_hi;
    bins.edges.push_back(e);
    bins.centers.push_back(omega0 + w +
                           hi_len * (static_cast<double>(i) + 0.5) / n_hi);
  }
  bins.edges.push_back(omega_max);

  // Quantile mapping can place the block boundaries a few ulp off the
  // nominal window edges; enforce monotonicity defensively.
  for (std::size_t i = 1; i < bins.edges.size(); ++i) {
    if (!(bins.edges[i] > bins.edges[i - 1])) {
      throw std::invalid_argument(
          "sample_modes: grid produced non-increasing edges");
    }
  }
  return bins;
}

// Int_a^b S_E dw for one bin. The zero-point part has the closed form
// (hbar / (6 pi c^3)) (b^4 - a^4); the thermal part is smooth across any
// single bin and a fixed 15-point rule is exact to roundoff there.
double bin_band_power(double a, double b, const SpectrumKind& kind,
                      const OscillatorParams& p) {
  const double c3 = std::pow(p.light_speed, 3);
  double total = 0.0;
  if (kind.has_zero_point()) {
    total += p.hbar / (6.0 * kPi * c3) * (std::pow(b, 4) - std::pow(a, 4));
  }
  if (kind.has_thermal() && kind.theta > 0.0) {
    const SpectrumKind thermal_only = SpectrumKind::thermal(kind.theta);
    total += gauss_kronrod_15(
        [&](double w) { return effective_field_psd(w, thermal_only, p); }, a,
        b);
  }
  return total;
}

}  // namespace

double GridSpec::resolved_omega_max(const SpectrumKind& kind,
                                    const OscillatorParams& p) const {
  if (omega_max > 0.0) return omega_max;
  const double w0 = p.natural_frequency;
  if (kind.has_thermal()) return w0 * std::max(10.0, 20.0 * kind.theta);
  return 10.0 * w0;
}

std::string GridSpec::strategy_name() const {
  return strategy == GridStrategy::resonance_stratified
             ? "resonance-stratified"
             : "uniform";
}

ModeEnsemble ModeEnsemble::sample(const SpectrumKind& kind,
                                  const OscillatorParams& p,
                                  const GridSpec& grid, std::uint64_t seed) {
  const double omega_max = grid.resolved_omega_max(kind, p);
  GridBins bins = build_bins(grid, p, omega_max);

  ModeEnsemble ens;
  ens.kind_ = kind;
  ens.seed_ = seed;
  ens.grid_ = grid;
  ens.grid_.omega_max = omega_max;

  const std::size_t n = bins.centers.size();
  ens.omega_ = std::move(bins.centers);
  ens.amp_.resize(n);
  ens.phase_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double band =
        bin_band_power(bins.edges[j], bins.edges[j + 1], kind, p);
    ens.amp_[j] = std::sqrt(std::max(0.0, 2.0 * band));
  }
  SplitMix64 rng(seed);
  for (std::size_t j = 0; j < n; ++j) {
    ens.phase_[j] = kTwoPi * rng.next_unit();
  }

  const double gamma = p.damping_rate();
  if (gamma > 0.0) {
    const double w0 = p.natural_frequency;
    const auto in_window = std::count_if(
        ens.omega_.begin(), ens.omega_.end(), [&](double w) {
          return std::abs(w - w0) <= 5.0 * gamma;
        });
    if (in_window < 10) {
      throw std::invalid_argument(
          "sample_modes: grid does not resolve the resonance (" +
          std::to_string(in_window) + " modes inside omega0 +/- 5 gamma, "
          "need >= 10)");
    }
  }
  return ens;
}

ModeEnsemble ModeEnsemble::from_modes(std::vector<Mode> modes,
                                      SpectrumKind kind, std::uint64_t seed) {
  ModeEnsemble ens;
  ens.kind_ = kind;
  ens.seed_ = seed;
  ens.grid_.n_modes = modes.size();
  ens.omega_.reserve(modes.size());
  ens.amp_.reserve(modes.size());
  ens.phase_.reserve(modes.size());
  double prev = -1.0;
  for (const Mode& m : modes) {
    if (!(m.omega > prev)) {
      throw std::invalid_argument(
          "from_modes: omegas must be strictly increasing and >= 0");
    }
    if (!(m.amplitude >= 0.0)) {
      throw std::invalid_argument("from_modes: amplitudes must be >= 0");
    }
    if (!(m.phase >= 0.0 && m.phase < kTwoPi)) {
      throw std::invalid_argument("from_modes: phases must lie in [0, 2pi)");
    }
    prev = m.omega;
    ens.omega_.push_back(m.omega);
    ens.amp_.push_back(m.amplitude);
    ens.phase_.push_back(m.phase);
  }
  ens.grid_.omega_max = ens.omega_.empty() ? 0.0 : ens.omega_.back();
  return ens;
}

double ModeEnsemble::field_at(double t) const {
  double e = 0.0;
  for (std::size_t j = 0; j < omega_.size(); ++j) {
    e += amp_[j] * std::cos(omega_[j] * t + phase_[j]);
  }
  return e;
}

double ModeEnsemble::vector_potential_at(double t,
                                         const OscillatorParams& p) const {
  double a = 0.0;
  for (std::size_t j = 0; j < omega_.size(); ++j) {
    if (!(omega_[j] > 0.0)) {
      throw std::invalid_argument(
          "vector_potential_at: ensemble contains omega = 0");
    }
    a += amp_[j] / omega_[j] * std::sin(omega_[j] * t + phase_[j]);
  }
  return -p.light_speed * a;
}

void ModeEnsemble::field_series(double t0, double step,
                                std::span<double> field,
                                std::span<double> field_dot) const {
  if (field.size() != field_dot.size()) {
    throw std::invalid_argument("field_series: span sizes differ");
  }
  std::fill(field.begin(), field.end(), 0.0);
  std::fill(field_dot.begin(), field_dot.end(), 0.0);
  constexpr std::size_t kResync = 8192;
  for (std::size_t j = 0; j < omega_.size(); ++j) {
    const double w = omega_[j];
    const double a = amp_[j];
    const double cr = std::cos(w * step);
    const double sr = std::sin(w * step);
    double c = 0.0, s = 0.0;
    for (std::size_t k = 0; k < field.size(); ++k) {
      if (k % kResync == 0) {  // rotation roundoff grows linearly; reset
        const double phi = w * (t0 + step * static_cast<double>(k)) + phase_[j];
        c = a * std::cos(phi);
        s = a * std::sin(phi);
      }
      field[k] += c;
      field_dot[k] -= w * s;
      const double cn = c * cr - s * sr;
      s = c * sr + s * cr;
      c = cn;
    }
  }
}

double ModeEnsemble::total_power() const {
  double p = 0.0;
  for (double a : amp_) p += 0.5 * a * a;
  return p;
}

std::string ModeEnsemble::to_json_string() const {
  nlohmann::json j;
  j["schema"] = "sedlab.mode_ensemble.v1";
  j["kind"] = {{"bath", kind_.name()}, {"theta", kind_.theta}};
  j["seed"] = seed_;
  j["generator"] = generator_name();
  j["grid"] = {{"strategy", grid_.strategy_name()},
               {"n_modes", grid_.n_modes},
               {"omega_max", grid_.omega_max},
               {"resonance_fraction", grid_.resonance_fraction},
               {"window_halfwidth_gammas", grid_.window_halfwidth_gammas}};
  j["omega"] = omega_;
  j["amplitude"] = amp_;
  j["phase"] = phase_;
  return j.dump(2);
}

ModeEnsemble ModeEnsemble::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.value("schema", "") != "sedlab.mode_ensemble.v1") {
    throw std::invalid_argument("from_json_string: unknown schema");
  }
  ModeEnsemble ens;
  ens.kind_ = SpectrumKind::parse(j.at("kind").at("bath").get<std::string>(),
                                  j.at("kind").at("theta").get<double>());
  ens.seed_ = j.at("seed").get<std::uint64_t>();
  const auto& g = j.at("grid");
  ens.grid_.strategy = g.at("strategy").get<std::string>() == "uniform"
                           ? GridStrategy::uniform
                           : GridStrategy::resonance_stratified;
  ens.grid_.n_modes = g.at("n_modes").get<std::size_t>();
  ens.grid_.omega_max = g.at("omega_max").get<double>();
  ens.grid_.resonance_fraction = g.at("resonance_fraction").get<double>();
  ens.grid_.window_halfwidth_gammas =
      g.at("window_halfwidth_gammas").get<double>();
  ens.omega_ = j.at("omega").get<std::vector<double>>();
  ens.amp_ = j.at("amplitude").get<std::vector<double>>();
  ens.phase_ = j.at("phase").get<std::vector<double>>();
  if (ens.omega_.size() != ens.amp_.size() ||
      ens.omega_.size() != ens.phase_.size()) {
    throw std::invalid_argument("from_json_string: array length mismatch");
  }
  for (std::size_t i = 1; i < ens.omega_.size(); ++i) {
    if (!(ens.omega_[i] > ens.omega_[i - 1])) {
      throw std::invalid_argument(
          "from_json_string: omegas not strictly increasing");
    }
  }
  return ens;
}

ModeEnsemble sample_modes(const SpectrumKind& kind, const OscillatorParams& p,
                          const GridSpec& grid, std::uint64_t seed) {
  return ModeEnsemble::sample(kind, p, grid, seed);
}

}  // namespace sedlab
