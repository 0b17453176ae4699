#pragma once
// Seedable 64-bit generator used by every sampled experiment.
//
// This is the splitmix64 state update (state += 0x9e3779b97f4a7c15, then
// two xor-multiply finalization rounds).  It is written out here, rather
// than pulled from <random>, because the repo documents the exact stream
// so results reproduce across implementations and languages:
//
//   state_{i+1} = state_i + 0x9e3779b97f4a7c15
//   z = state_{i+1}
//   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
//   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
//   output_i = z ^ (z >> 31)
//
// Conventions used throughout the toolkit (see README):
//   * a w-bit word is the low w bits of one output,
//   * bounded draws use bitmask rejection (unbiased),
//   * substream k of a master seed s is the k-th output of the stream
//     seeded with s; workers and trials each get their own substream.

#include <cstdint>

namespace rotkit {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Low b bits of the next output, 1 <= b <= 64.
  std::uint64_t bits(int b) {
    const std::uint64_t v = next();
    return b >= 64 ? v : (v & ((std::uint64_t{1} << b) - 1));
  }

  // Uniform draw in [0, n), n >= 1, by masked rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t v;
    do {
      v = next() & mask;
    } while (v >= n);
    return v;
  }

 private:
  std::uint64_t state_;
};

// k-th output (k = 0, 1, ...) of the stream seeded with `master`.  Used to
// hand independent, order-insensitive seeds to workers, blocks and trials.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t k) {
  std::uint64_t z = master + (k + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace rotkit
