#pragma once

#include <cstdint>
#include <string_view>

namespace pufkit {

/// 64-bit FNV-1a over a byte string. Folds string identities (device ids)
/// into seed material for stream derivation.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// SplitMix64 finalizer: a full-avalanche 64-to-64 bit mix.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Derivation step for independent substreams:
///   h' = mix64(h XOR (v + golden-ratio increment)).
/// Chaining absorb() over (purpose, region, measurement, noise seed) yields
/// the documented reproducible stream-seed rule.
constexpr std::uint64_t absorb(std::uint64_t h, std::uint64_t v) {
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL));
}

/// SplitMix64 generator (Steele, Lea, Flood 2014). Counter-based, trivially
/// seedable, identical output on every platform.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Bernoulli(p) draw. p = 0 never fires, p = 1 always fires.
  bool next_bernoulli(double p) { return next_unit() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace pufkit
