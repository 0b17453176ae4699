#pragma once
// The 4x4 state of w-bit words, column/diagonal rounds, and the
// alternating multi-round permutation R^i (column first, R^0 = id).
//
// Layout is row-major: entry (row, col) lives at v[4*row + col].  A column
// round applies the quarter round to each column (x_{0,i}, x_{1,i}, x_{2,i},
// x_{3,i}); a diagonal round applies it to the wrapped diagonals
// (x_{0,i}, x_{1,i+1}, x_{2,i+2}, x_{3,i+3}), column indices mod 4.

#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>

#include "rotkit/quarter_round.hpp"
#include "rotkit/words.hpp"

namespace rotkit {

struct State {
  std::array<std::uint32_t, 16> v{};

  std::uint32_t& at(int row, int col) { return v[4 * row + col]; }
  std::uint32_t at(int row, int col) const { return v[4 * row + col]; }
  bool operator==(const State&) const = default;
};

enum class RoundKind { column, diagonal };

namespace detail {

inline State round_with(const QrKernel& k, const State& x, RoundKind kind) {
  State out;
  for (int i = 0; i < 4; ++i) {
    // Gather the four words feeding quarter round i of this round.
    int idx[4];
    for (int row = 0; row < 4; ++row)
      idx[row] = 4 * row + (kind == RoundKind::column ? i : (i + row) & 3);
    const WordVec4 in{x.v[idx[0]], x.v[idx[1]], x.v[idx[2]], x.v[idx[3]]};
    const WordVec4 y = k.qr(in);
    for (int row = 0; row < 4; ++row) out.v[idx[row]] = y[row];
  }
  return out;
}

inline void validate_state(const State& x, const WordSpec& spec) {
  const std::uint32_t m = spec.mask();
  for (std::uint32_t word : x.v)
    if (word > m)
      throw std::domain_error("state word " + std::to_string(word) + " does not fit in " +
                              std::to_string(spec.w) + " bits");
}

}  // namespace detail

inline State round(const QuarterRoundParams& p, const State& x, RoundKind kind) {
  detail::validate_state(x, p.spec);
  return detail::round_with(detail::QrKernel(p), x, kind);
}

// R^i: column, diagonal, column, ... starting with column; i = 0 is identity.
inline State permute_rounds(const QuarterRoundParams& p, const State& x, int rounds) {
  if (rounds < 0) throw std::domain_error("round count must be >= 0");
  detail::validate_state(x, p.spec);
  const detail::QrKernel k(p);
  State s = x;
  for (int i = 0; i < rounds; ++i)
    s = detail::round_with(k, s, (i & 1) == 0 ? RoundKind::column : RoundKind::diagonal);
  return s;
}

inline State rotate_state(const State& x, int r, const WordSpec& spec) {
  State out;
  for (int i = 0; i < 16; ++i) out.v[i] = rotate_word(x.v[i], r, spec);
  return out;
}

// Hex codec used by the CLI and tests: 16 words, row-major, each as
// fixed-width lowercase hex (ceil(w/4) digits), separated by single spaces.
inline std::string state_to_hex(const State& x, const WordSpec& spec) {
  detail::validate_state(x, spec);
  const int digits = (spec.w + 3) / 4;
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(16 * (digits + 1));
  for (int i = 0; i < 16; ++i) {
    if (i) out.push_back(' ');
    for (int d = digits - 1; d >= 0; --d) out.push_back(hex[(x.v[i] >> (4 * d)) & 0xf]);
  }
  return out;
}

inline State state_from_hex(const std::string& text, const WordSpec& spec) {
  const int digits = (spec.w + 3) / 4;
  const std::uint32_t m = spec.mask();
  std::istringstream in(text);
  State out;
  std::string tok;
  for (int i = 0; i < 16; ++i) {
    if (!(in >> tok)) throw std::domain_error("state hex: expected 16 words, got " + std::to_string(i));
    if ((int)tok.size() != digits)
      throw std::domain_error("state hex: word " + std::to_string(i) + " must be exactly " +
                              std::to_string(digits) + " hex digits, got '" + tok + "'");
    std::uint32_t v = 0;
    for (char c : tok) {
      int nib;
      if (c >= '0' && c <= '9') nib = c - '0';
      else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
      else throw std::domain_error("state hex: bad digit '" + std::string(1, c) + "'");
      v = (v << 4) | (std::uint32_t)nib;
    }
    if (v > m)
      throw std::domain_error("state hex: word '" + tok + "' does not fit in " +
                              std::to_string(spec.w) + " bits");
    out.v[i] = v;
  }
  if (in >> tok) throw std::domain_error("state hex: trailing input after 16 words");
  return out;
}

}  // namespace rotkit
