#pragma once
// w-bit words and circular rotation, with w a runtime parameter.
//
// A "word" is the low w bits of a uint32_t, 2 <= w <= 32.  One engine
// serves both toy sizes (w=4..6, where exhaustive search is possible)
// and the full-size w=32 permutation.  All arithmetic is reduced mod
// 2^w by masking; the checked entry points throw std::domain_error on
// out-of-range words or rotation amounts so a bad flag value fails
// loudly instead of silently wrapping.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rotkit {

inline constexpr int kMinWordBits = 2;
inline constexpr int kMaxWordBits = 32;

struct WordSpec {
  int w = 32;

  void validate() const {
    if (w < kMinWordBits || w > kMaxWordBits)
      throw std::domain_error("word size must be in [2,32], got " + std::to_string(w));
  }
  std::uint32_t mask() const {
    validate();
    return w == 32 ? 0xffffffffu : ((std::uint32_t{1} << w) - 1u);
  }
};

namespace detail {

// Unchecked rotate: caller guarantees 0 <= r < w and x already masked.
inline std::uint32_t rotl_raw(std::uint32_t x, int r, int w, std::uint32_t mask) {
  if (r == 0) return x;
  return ((x << r) | (x >> (w - r))) & mask;
}

}  // namespace detail

// Left-rotate the low w bits of x by r positions.  Allows r = 0 (identity);
// rejects r >= w and values with bits above position w-1.
inline std::uint32_t rotate_word(std::uint32_t x, int r, const WordSpec& spec) {
  const std::uint32_t m = spec.mask();
  if (x > m)
    throw std::domain_error("word value " + std::to_string(x) + " does not fit in " +
                            std::to_string(spec.w) + " bits");
  if (r < 0 || r >= spec.w)
    throw std::domain_error("rotation amount " + std::to_string(r) + " out of range [0," +
                            std::to_string(spec.w) + ")");
  return detail::rotl_raw(x, r, spec.w, m);
}

// Rotation distance used for rotational pairs (x, x <<< r): the trivial
// r = 0 carries no information, so the probability machinery insists on
// 1 <= r <= w-1.
inline void validate_rot_distance(int r, int w) {
  WordSpec{w}.validate();
  if (r < 1 || r > w - 1)
    throw std::domain_error("rotation distance must be in [1," + std::to_string(w - 1) +
                            "], got " + std::to_string(r));
}

}  // namespace rotkit
