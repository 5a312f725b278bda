#ifndef SLP_RNG_HPP
#define SLP_RNG_HPP

#include <cstdint>
#include <string_view>

namespace slp {

// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
  return mix64(seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

inline std::uint64_t hash_string(std::uint64_t seed, std::string_view s) {
  std::uint64_t h = mix64(seed ^ 0x5bf03635f0935ad1ULL);
  for (unsigned char c : s) h = mix64(h ^ c);
  return h;
}

// Counter-based deterministic generator: the stream is a pure function of
// (key, counter), so independent consumers can be forked by key without
// sharing state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next() { return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++ctr_); }

  // Uniform in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t lim = ~0ULL - ~0ULL % n;
    std::uint64_t r;
    do r = next(); while (r >= lim);
    return r % n;
  }

  // Uniform in [1, s_max], the sample set of the identity-testing screen.
  std::uint64_t uniform_1_to(std::uint64_t s_max) { return 1 + below(s_max); }

  CounterRng fork(std::uint64_t salt) const { return CounterRng(hash_combine(key_, salt)); }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace slp

#endif
