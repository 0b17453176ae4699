#pragma once
// Rendering boundary: exact rationals in, strings out.
//
// The contract (shared by text, CSV and JSON output):
//   (a) reduced fraction, printed only when the denominator has <= 20 digits,
//   (b) decimal to 5 places, rounded half-to-even, computed exactly in
//       integer arithmetic (no double in the rounding path),
//   (c) log2 to 2 decimal places, also half-to-even, printed "~2^-X.YZ".
// log2 itself is the one place a double appears: the rational is scaled so
// its top 53 bits convert exactly, leaving ~1e-15 absolute error against a
// 0.005 rounding granularity.

#include <cfenv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "rotkit/rational.hpp"

namespace rotkit {

namespace detail {

inline BigInt pow10(int e) {
  BigInt p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace detail

// Exact decimal rendering of a non-negative rational, half-to-even ties.
inline std::string decimal_string(const BigRat& v, int places) {
  if (v < 0) throw std::domain_error("decimal_string: negative value");
  if (places < 0) throw std::domain_error("decimal_string: places must be >= 0");
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  const BigInt scale = detail::pow10(places);
  const BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt rem = scaled % den;
  const BigInt twice = rem * 2;
  if (twice > den || (twice == den && (q % 2) == 1)) ++q;
  const BigInt ip = q / scale;
  if (places == 0) return ip.str();
  std::string frac = BigInt(q % scale).str();
  frac.insert(0, (size_t)places - frac.size(), '0');
  return ip.str() + "." + frac;
}

// log2 of a positive big integer: exact bit length plus the log of a
// 53-bit mantissa (converted losslessly to double).
inline double log2_bigint(const BigInt& n) {
  if (n <= 0) throw std::domain_error("log2_bigint: value must be positive");
  const long b = (long)boost::multiprecision::msb(n);  // floor(log2 n)
  const int shift = b > 52 ? (int)(b - 52) : 0;
  const double mant = (shift ? BigInt(n >> shift) : n).convert_to<double>();
  return (double)shift + std::log2(mant);
}

inline double log2_value(const BigRat& v) {
  if (v <= 0) throw std::domain_error("log2_value: value must be positive");
  return log2_bigint(boost::multiprecision::numerator(v)) -
         log2_bigint(boost::multiprecision::denominator(v));
}

// Round to 2 decimals with ties to even (nearbyint honors the default
// FE_TONEAREST mode, which is exactly round-half-even).
inline double round_2dp(double x) { return std::nearbyint(x * 100.0) / 100.0; }

// "~2^-6.83" style, for values in (0, 1]; exponent printed to 2 decimals.
inline std::string log2_pow_string(const BigRat& v) {
  const double e = round_2dp(-log2_value(v));
  char buf[48];
  std::snprintf(buf, sizeof buf, "~2^-%.2f", e);
  return buf;
}

// Full text rendering of a probability per the contract above.
inline std::string render_prob(const BigRat& v) {
  const std::string dec = decimal_string(v, 5);
  if (v == 0) return dec;
  const std::string tail = dec + " " + log2_pow_string(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den.str().size() <= 20)
    return boost::multiprecision::numerator(v).str() + "/" + den.str() + " = " + tail;
  return tail;
}

inline std::string render_prob(const ExactProb& p) { return render_prob(p.value()); }

// Expectations can exceed 1, where the 2^-X.YZ form stops making sense;
// render fraction + decimal only.
inline std::string render_expectation(const BigRat& v) {
  const std::string dec = decimal_string(v, 5);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den.str().size() <= 20)
    return boost::multiprecision::numerator(v).str() + "/" + den.str() + " = " + dec;
  return dec;
}

}  // namespace rotkit
