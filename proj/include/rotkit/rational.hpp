#pragma once
// Exact arithmetic for the probability formulas: arbitrary-precision
// integers/rationals plus the binomial helper every closed form needs.
// No floating point enters any computation built on this header; doubles
// appear only at the rendering boundary (format.hpp).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace rotkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;  // always canonical / reduced

inline BigInt pow2(int e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  return BigInt(1) << e;
}

// C(n, k) with arbitrary-precision n and small k, as a k-term falling
// factorial.  The closed forms only ever need small k (at most the addend
// count), while n can be near 2^w, so this stays cheap even at w=32.
// C(n, k) = 0 when n < 0 or k < 0; when 0 <= n < k the product crosses
// zero and the result is 0 with no special casing.
inline BigInt binom(const BigInt& n, long long k) {
  if (k < 0 || n < 0) return 0;
  BigInt acc = 1;
  for (long long t = 0; t < k; ++t) {
    acc *= (n - t);
    acc /= (t + 1);  // exact at every step: acc is C(n, t+1) * (t+1)! / (t+1)!
  }
  return acc;
}

// A probability: reduced non-negative rational bounded by 1.  BigRat keeps
// itself canonical, so equality below is exact value equality.
class ExactProb {
 public:
  ExactProb() : v_(0) {}
  explicit ExactProb(BigRat v) : v_(std::move(v)) { check(); }
  ExactProb(const BigInt& num, const BigInt& den) {
    if (den <= 0) throw std::domain_error("probability denominator must be positive");
    v_ = BigRat(num, den);
    check();
  }

  const BigRat& value() const { return v_; }
  BigInt num() const { return boost::multiprecision::numerator(v_); }
  BigInt den() const { return boost::multiprecision::denominator(v_); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) { return a.v_ == b.v_; }
  friend bool operator<(const ExactProb& a, const ExactProb& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactProb& a, const ExactProb& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactProb& a, const ExactProb& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactProb& a, const ExactProb& b) { return a.v_ >= b.v_; }

  friend ExactProb operator*(const ExactProb& a, const ExactProb& b) {
    return ExactProb(a.v_ * b.v_);  // product of values in [0,1] stays in [0,1]
  }

 private:
  void check() const {
    if (v_ < 0 || v_ > 1)
      throw std::domain_error("probability outside [0,1]: " + v_.str());
  }
  BigRat v_;
};

inline BigRat rat_pow(BigRat base, unsigned long long e) {
  BigRat acc = 1;
  while (e) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

inline ExactProb prob_pow(const ExactProb& p, unsigned long long e) {
  return ExactProb(rat_pow(p.value(), e));
}

}  // namespace rotkit
