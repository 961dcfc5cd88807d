#pragma once

#include <cstdint>

namespace oddcolor {

// Portable seeded generator used for every randomized run. SplitMix64:
//   state += 0x9e3779b97f4a7c15
//   z = state; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   return z ^ (z >> 31)
// Identical seeds give identical streams on every platform; there is no
// dependence on std::mt19937 distributions, whose output is not portable.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound) by rejection below the largest multiple
  // of bound that fits in 64 bits.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ull / bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Stream for the i-th sample of a seeded scan: SplitMix64 with initial state
// seed ^ ((i+1) * 0x9e3779b97f4a7c15). Samples are independent of how the
// index range is split across threads.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ ((index + 1) * 0x9e3779b97f4a7c15ull));
}

}  // namespace oddcolor
