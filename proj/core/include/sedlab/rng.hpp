#pragma once

#include <cstdint>

namespace sedlab {

// SplitMix64 (Steele/Lea/Flood). Chosen over the std engines because its
// output sequence is fixed by the algorithm itself, bit-for-bit on every
// platform, which the replay contracts require. Phases are the only random
// inputs anywhere in this project.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed-splitting rule for ensemble realizations: the stream for realization
// `index` under `base` is SplitMix64 seeded with
//   scramble(base + (index + 1) * 0x9e3779b97f4a7c15)
// where scramble is the SplitMix64 output function. Documented here because
// replay files record only (base seed, index).
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline const char* generator_name() { return "splitmix64"; }

}  // namespace sedlab
