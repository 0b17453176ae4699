#pragma once
// The ChaCha-style quarter round over four w-bit words, its inverse, and
// the traced form that exposes the four intermediate sums.
//
//   b0 = x0 + x1              y0 = b0 + b1
//   b3 = (b0 ^ x3) <<< r1     y3 = (y0 ^ b3) <<< r3
//   b2 = b3 + x2              y2 = y3 + b2
//   b1 = (b2 ^ x1) <<< r2     y1 = (y2 ^ b1) <<< r4
//
// The b-values matter beyond debugging: the commutation-condition census
// evaluates its four equalities on (x0,x1), (b3,x2), (b0,b1) and (y3,b2),
// so quarter_round_trace is part of the public contract.

#include <array>
#include <cstdint>

#include "rotkit/words.hpp"

namespace rotkit {

using WordVec4 = std::array<std::uint32_t, 4>;

struct QuarterRoundParams {
  WordSpec spec{};  // defaults to w=32
  // Full-size defaults are the ChaCha20 constants.
  int r1 = 16, r2 = 12, r3 = 8, r4 = 7;

  int w() const { return spec.w; }
  std::uint32_t mask() const { return spec.mask(); }

  void validate() const {
    spec.validate();
    for (int r : {r1, r2, r3, r4})
      if (r < 0 || r >= spec.w)
        throw std::domain_error("quarter-round rotation constant " + std::to_string(r) +
                                " out of range [0," + std::to_string(spec.w) + ")");
  }
};

struct QrTrace {
  std::uint32_t b0 = 0, b1 = 0, b2 = 0, b3 = 0;
  WordVec4 y{};
};

namespace detail {

// Validated-once kernel for hot loops: census code constructs one kernel
// and then runs unchecked over the whole input space.
struct QrKernel {
  int w;
  std::uint32_t mask;
  int r1, r2, r3, r4;

  explicit QrKernel(const QuarterRoundParams& p)
      : w(p.w()), mask(p.mask()), r1(p.r1), r2(p.r2), r3(p.r3), r4(p.r4) {
    p.validate();
  }

  std::uint32_t rot(std::uint32_t x, int r) const { return rotl_raw(x, r, w, mask); }

  QrTrace trace(const WordVec4& x) const {
    QrTrace t;
    t.b0 = (x[0] + x[1]) & mask;
    t.b3 = rot(t.b0 ^ x[3], r1);
    t.b2 = (t.b3 + x[2]) & mask;
    t.b1 = rot(t.b2 ^ x[1], r2);
    t.y[0] = (t.b0 + t.b1) & mask;
    t.y[3] = rot(t.y[0] ^ t.b3, r3);
    t.y[2] = (t.y[3] + t.b2) & mask;
    t.y[1] = rot(t.y[2] ^ t.b1, r4);
    return t;
  }

  WordVec4 qr(const WordVec4& x) const { return trace(x).y; }

  WordVec4 inverse(const WordVec4& y) const {
    // Run the eight assignments backwards; <<< r undoes as <<< (w-r).
    const auto unrot = [&](std::uint32_t v, int r) {
      return r == 0 ? v : rotl_raw(v, w - r, w, mask);
    };
    const std::uint32_t b1 = unrot(y[1], r4) ^ y[2];
    const std::uint32_t b2 = (y[2] - y[3]) & mask;
    const std::uint32_t b3 = unrot(y[3], r3) ^ y[0];
    const std::uint32_t b0 = (y[0] - b1) & mask;
    WordVec4 x{};
    x[1] = unrot(b1, r2) ^ b2;
    x[2] = (b2 - b3) & mask;
    x[3] = unrot(b3, r1) ^ b0;
    x[0] = (b0 - x[1]) & mask;
    return x;
  }
};

inline void validate_vec(const WordVec4& x, const WordSpec& spec) {
  const std::uint32_t m = spec.mask();
  for (std::uint32_t v : x)
    if (v > m)
      throw std::domain_error("word value " + std::to_string(v) + " does not fit in " +
                              std::to_string(spec.w) + " bits");
}

}  // namespace detail

inline QrTrace quarter_round_trace(const QuarterRoundParams& p, const WordVec4& x) {
  detail::validate_vec(x, p.spec);
  return detail::QrKernel(p).trace(x);
}

inline WordVec4 quarter_round(const QuarterRoundParams& p, const WordVec4& x) {
  return quarter_round_trace(p, x).y;
}

inline WordVec4 inverse_quarter_round(const QuarterRoundParams& p, const WordVec4& y) {
  detail::validate_vec(y, p.spec);
  return detail::QrKernel(p).inverse(y);
}

// Parallel rotation: every word rotated independently by the same amount.
inline WordVec4 rotate_vec(const WordVec4& x, int r, const WordSpec& spec) {
  WordVec4 out{};
  for (int i = 0; i < 4; ++i) out[i] = rotate_word(x[i], r, spec);
  return out;
}

}  // namespace rotkit
