#pragma once

#include <cstdint>

namespace su2lgt {

/// Counter-based generator: every stream is keyed by (seed, purpose,
/// indices) so that concurrent evaluations draw from independent,
/// reproducible streams regardless of scheduling.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, std::uint64_t purpose, std::uint64_t a = 0,
           std::uint64_t b = 0, std::uint64_t c = 0) {
    state_ = mix(mix(mix(mix(seed ^ 0x9e3779b97f4a7c15ull, purpose), a), b), c);
  }

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix_out(state_);
  }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    return next_u64() % bound;
  }

 private:
  static std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return mix_out(h);
  }
  static std::uint64_t mix_out(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
  }
  std::uint64_t state_;
};

}  // namespace su2lgt
