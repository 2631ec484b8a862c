#pragma once

#include "mixspec/exact.hpp"

#include <cstdint>

namespace mixspec {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that sample
/// streams are byte-identical across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream for index `i` of a sharded job keyed by `seed`.
  static SplitMix64 for_index(std::uint64_t seed, std::uint64_t i) {
    SplitMix64 outer(seed ^ (i * 0xd1b54a32d192ed03ull));
    outer.next();
    return SplitMix64(outer.next() ^ i);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = next();
      if (x >= limit) return x % bound;
    }
  }

  /// Uniform in [0, bound) for an arbitrary-precision bound > 0.
  BigInt below(const BigInt& bound) {
    const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1;
    for (;;) {
      BigInt x = 0;
      for (unsigned filled = 0; filled < bits; filled += 64) {
        x <<= 64;
        x |= next();
      }
      x &= pow2(bits) - 1;
      if (x < bound) return x;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace mixspec
