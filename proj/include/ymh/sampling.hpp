#ifndef YMH_SAMPLING_HPP
#define YMH_SAMPLING_HPP

#include <cstdint>

namespace ymh {

/// Small deterministic PRNG (splitmix64); seeds the QMC shifts and the
/// random band-limited test fields.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  uint64_t state_;
};

/// Radical-inverse (van der Corput) value of index i in the given base.
double radical_inverse(uint64_t i, uint32_t base);

} // namespace ymh

#endif
