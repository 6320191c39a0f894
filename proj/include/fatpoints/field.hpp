#pragma once

#include <cstdint>

#include "fatpoints/errors.hpp"

namespace fatpoints {

// One round of the splitmix64 mixer (Steele/Lea/Flood): the increment is the
// golden-ratio constant 0x9e3779b97f4a7c15, followed by two xor-shift
// multiplies with 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb.  This is the
// mixing function behind every seeded draw in the library, so seeded runs
// are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [lo, hi] (hi - lo small against 2^64, so the
  // modulo bias is irrelevant here).
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  return SplitMix64(x).next();
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Arithmetic in Z/p for a prime p.  Primes below 2^31 take a Barrett fast
// path (one 64x64 high multiply instead of a hardware division); larger
// primes fall back to 128-bit remainders.
class Fp {
 public:
  explicit Fp(std::uint64_t p);

  std::uint64_t p() const { return p_; }

  std::uint64_t reduce_u64(std::uint64_t v) const { return v % p_; }

  std::uint64_t reduce_ll(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(r);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (small_) {
      std::uint64_t x = a * b;  // a, b < 2^31, no overflow
      std::uint64_t q = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(x) * magic_) >> 64);
      std::uint64_t r = x - q * p_;
      while (r >= p_) r -= p_;
      return r;
    }
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p_);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_ = 0;
  std::uint64_t magic_ = 0;  // floor(2^64 / p) when small_
  bool small_ = false;
};

}  // namespace fatpoints
