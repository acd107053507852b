#pragma once

#include <array>
#include <cstdint>

#include "nambu3/scalar.hpp"

namespace nambu3 {

/// splitmix64 step; used only to expand a 64-bit seed into xoshiro state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded by four successive splitmix64 outputs.
///
/// Stream contract (portable across implementations):
///   - integer in [-R, R]: draw x, reject while x >= (2R+1) * floor(2^64 / (2R+1)),
///     return (x mod (2R+1)) - R;
///   - real in [-1, 1): draw x, u = (x >> 11) * 2^-53, return 2u - 1;
///   - a complex scalar consumes its real part first, then its imaginary part.
class Xoshiro256ss {
public:
  using result_type = std::uint64_t;

  explicit Xoshiro256ss(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : s_) word = splitmix64(sm);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  std::int64_t uniform_int(std::int64_t range) {
    // width is odd, so floor(2^64 / width) == floor((2^64 - 1) / width).
    const auto width = static_cast<std::uint64_t>(2 * range + 1);
    const std::uint64_t limit = (max() / width) * width;
    std::uint64_t x = (*this)();
    while (x >= limit) x = (*this)();
    return static_cast<std::int64_t>(x % width) - range;
  }

  double uniform_real() {
    const double u = static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> s_{};
};

template <ScalarType S>
S draw_scalar(Xoshiro256ss& rng, std::int64_t range) {
  if constexpr (scalar_traits<S>::exact) {
    const std::int64_t re = rng.uniform_int(range);
    const std::int64_t im = rng.uniform_int(range);
    return S(re, im);
  } else {
    const double re = rng.uniform_real();
    const double im = rng.uniform_real();
    return S(re, im);
  }
}

}  // namespace nambu3
