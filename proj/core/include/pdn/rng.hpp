#ifndef PDN_RNG_HPP
#define PDN_RNG_HPP

#include <cmath>
#include <cstdint>

namespace pdn {

/// Seed for a reproducible random stream. Same seed, same platform-independent
/// integer sequence.
struct Seed {
  std::uint64_t value = 0;
};

/// SplitMix64 step. Used to expand a 64-bit seed into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256++ by Blackman & Vigna. Integer-only state transitions, so the
/// raw stream is bit-identical on every platform. This is the single source
/// of randomness in the toolkit; all noise realizations, patch draws and
/// weight initializations are derived from it.
class Xoshiro256pp {
 public:
  Xoshiro256pp() : Xoshiro256pp(Seed{0}) {}

  explicit Xoshiro256pp(Seed seed) {
    SplitMix64 sm(seed.value);
    for (auto& s : s_) s = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Multiply-shift with rejection so the result
  /// is exactly uniform and consumes a deterministic-given-stream number of
  /// draws.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) return 0;
    while (true) {
      std::uint64_t x = next();
      __uint128_t m = static_cast<__uint128_t>(x) * n;
      std::uint64_t lo = static_cast<std::uint64_t>(m);
      if (lo >= n) return static_cast<std::uint64_t>(m >> 64);
      // Lemire rejection for the biased low range.
      std::uint64_t threshold = (0-n) % n;
      if (lo >= threshold) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  bool coin_flip() { return (next() >> 63) != 0; }

  /// Standard normal via the Marsaglia polar method. The spare value is
  /// discarded so each call consumes a self-contained run of draws.
  double normal() {
    while (true) {
      double u = 2.0 * uniform01() - 1.0;
      double v = 2.0 * uniform01() - 1.0;
      double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

/// Derives an independent stream from (seed, index). The seed is XORed with
/// the stream index and expanded through SplitMix64, so nearby indices give
/// decorrelated states. Stream index conventions:
///   0               master stream (patch/augmentation draws, shuffles)
///   1               weight initialization
///   2 + i*R + r     noise for image i, realization r (R realizations), and
///                   likewise noise for training iteration i, batch slot r
inline Xoshiro256pp derive_stream(Seed seed, std::uint64_t index) {
  return Xoshiro256pp(Seed{seed.value ^ index});
}

}  // namespace pdn

#endif  // PDN_RNG_HPP
