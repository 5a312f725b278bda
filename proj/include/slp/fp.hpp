#ifndef SLP_FP_HPP
#define SLP_FP_HPP

#include <cstdint>

namespace slp {

// Fixed word-size primes used by the modular engine.  They are published
// constants (the largest primes below 2^62) so that runs are reproducible
// across builds; cross-validation uses at least two of them before a
// modular rank is trusted on a deficiency path.
inline constexpr std::uint64_t kPrimes[8] = {
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387737ULL,
    4611686018427387733ULL, 4611686018427387709ULL,
};
inline constexpr int kPrimeCount = 8;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;  // a,b < p < 2^62, no overflow
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

// p prime, a != 0 mod p.
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a % p, p - 2, p);
}

inline std::uint64_t neg_mod(std::uint64_t a, std::uint64_t p) {
  return a == 0 ? 0 : p - a;
}

}  // namespace slp

#endif
