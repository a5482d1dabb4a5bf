#pragma once

// Random number plumbing. Two kinds of generators are used:
//
//  * Stream — an ordinary sequential engine for sampling loops (Haar
//    draws, oracle samplers). One stream per task, never shared.
//
//  * CounterStream — counter-based values: every draw is a pure function
//    of (seed, counter). Matrix prefixes index their entries into the
//    counter space, so two prefixes with the same seed agree on every
//    entry no matter in which order corners were materialized.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>

namespace cornerlab {

using Stream = std::mt19937_64;

// SplitMix64 finalizer; full-avalanche bijective mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline Stream make_stream(std::uint64_t seed) {
  Stream s(mix64(seed));
  s.discard(8);  // decouple nearby seeds
  return s;
}

// Mixes (master, tag, a, b) into a stream seed. Deterministic and
// injective-in-practice over desk-scale coordinate grids.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::string_view tag,
                                           std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t h = mix64(master ^ 0x8f1bbcdcbfa53e0bULL);
  h = mix64(h ^ fnv1a64(tag));
  h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ (b + 0xd1b54a32d192ed03ULL));
  return h;
}

class CounterStream {
 public:
  explicit CounterStream(std::uint64_t seed) : key_(mix64(seed ^ 0x5851f42d4c957f2dULL)) {}

  std::uint64_t bits(std::uint64_t counter) const noexcept {
    return mix64(key_ ^ mix64(counter + 0x2545f4914f6cdd1dULL));
  }

  // uniform in (0, 1]
  double uniform(std::uint64_t counter) const noexcept {
    return (static_cast<double>(bits(counter) >> 11) + 1.0) * 0x1.0p-53;
  }

  // standard normal pair, Box-Muller on counters (2c, 2c+1)
  std::pair<double, double> normal_pair(std::uint64_t counter) const noexcept {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * kPi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  double normal(std::uint64_t counter) const noexcept { return normal_pair(counter).first; }

  // standard complex normal with E|z|^2 = 1
  std::complex<double> complex_normal(std::uint64_t counter) const noexcept {
    const auto [a, b] = normal_pair(counter);
    return {a * kInvSqrt2, b * kInvSqrt2};
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  static constexpr double kInvSqrt2 = 0.70710678118654752440;
  std::uint64_t key_;
};

}  // namespace cornerlab
