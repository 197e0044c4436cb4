#pragma once

// Seedable, portable random number generation. The engine is xoshiro256**
// seeded through splitmix64; both are fully specified bit-for-bit, so runs
// reproduce exactly across platforms and standard-library versions (the
// std:: distributions make no such guarantee, so sampling is done by hand).
//
// Stream splitting: every independent random stream gets its own seed via
// split_seed(parent_seed, a, b, c). The experiment harness uses
//   instance seed = split_seed(master, model_tag, n, instance)
//   graph stream  = split_seed(instance_seed, 1)
//   initials      = split_seed(instance_seed, 2)
//   run stream    = split_seed(instance_seed, 3 + algorithm, initial_slot)
// so changing one instance's seed cannot perturb any other stream.

#include <cstdint>
#include <stdexcept>

namespace netcover {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
inline constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
}  // namespace detail

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b = 0, std::uint64_t c = 0) {
  std::uint64_t x = seed;
  x = detail::mix64(x + detail::golden * (a + 1));
  x = detail::mix64(x + detail::golden * (b + 1));
  x = detail::mix64(x + detail::golden * (c + 1));
  return x;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& word : state_) {
      x += detail::golden;
      word = detail::mix64(x);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, bound), unbiased (rejection sampling).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace netcover
