#pragma once
// Exact rotational-probability formulas and bounds.
//
// Everything here is closed-form and exact (reduced big rationals):
//
//   D(w,r)            = (2^r+1)(2^{w-r}+1) / 2^{w+2}
//                       probability that one modular addition of two
//                       uniform words commutes with <<< r.
//   F(q,k,w)          = number of k-tuples (y_1..y_k), 0 <= y_i <= 2^q - 1,
//                       whose sum reduced mod 2^w again fits in q bits;
//                       evaluated by inclusion-exclusion (see f_count).
//   multi-add prob    = F(r,k,w) * F(w-r,k,w) / 2^{kw}
//                       k-addend generalization of D.
//   P(r,w)            = D * (2^r+2)(2^{w-r}+2) / (9*2^w)
//                       + [r=1 or r=w-1] * 4/2^{3w} * C(2^{w-1}, 2^{w-1}-3)
//                       the k=3 case in closed form.
//   K(w,r)            = D * (2^r+2)(2^{w-r}+2) / (9*2^w)
//                       chained-addition probability: both the 2-addend and
//                       the 3-addend commutations hold (no indicator term).
//   quarter-round     lower = D^3 * K   ("chain" variant)
//   bounds            lower = D^3 * P   ("corrected" variant)
//                     upper = K^2       (both variants)
//   i-round bounds    (lower^{4i}, upper^{4i}) — four quarter rounds per
//                     round, treated as independent across rounds; this
//                     independence is a heuristic and reports label multi-
//                     round output accordingly.
//
// The two lower-bound variants are both genuinely in use: the toy-scale
// census table matches D^3*K, while the full-size propagation table matches
// D^3*P.  The toolkit computes both and lets the caller (or the table being
// reproduced) pick.  Note that the corrected lower bound is NOT always
// below the upper bound (already at w=5, r=1 it crosses), so BoundsPair
// stores whatever the formulas give and exposes ordered() for callers that
// want to flag the inversion rather than hide it.

#include <numeric>
#include <stdexcept>

#include "rotkit/rational.hpp"
#include "rotkit/words.hpp"

namespace rotkit {

enum class BoundVariant { chain, corrected };

inline const char* variant_name(BoundVariant v) {
  return v == BoundVariant::chain ? "chain" : "corrected";
}

struct BoundsPair {
  ExactProb lower;
  ExactProb upper;
  BoundVariant variant = BoundVariant::chain;

  bool ordered() const { return lower <= upper; }
};

inline ExactProb daum_prob(int w, int r) {
  validate_rot_distance(r, w);
  return ExactProb((pow2(r) + 1) * (pow2(w - r) + 1), pow2(w + 2));
}

// F(q,k,w) by inclusion-exclusion over the bounded compositions of
// sum = h*2^w + l, 0 <= l <= 2^q - 1:
//
//   F = sum_{h=0}^{floor(k(2^q-1)/2^w)} sum_{j=0}^{k} (-1)^j C(k,j)
//         [ C(h*2^w - (j-1)*2^q - 1 + k, k) - C(h*2^w - j*2^q - 1 + k, k) ]
//
// where a term is 0 whenever its lower argument a = (...) - 1 is negative.
// binom() already returns 0 for negative n, and for -k <= a < 0 the falling
// factorial crosses zero, so both cases fall out naturally.
inline BigInt f_count(int q, int k, int w) {
  WordSpec{w}.validate();
  if (q < 1 || q > w - 1)
    throw std::domain_error("f_count: q must be in [1," + std::to_string(w - 1) + "], got " +
                            std::to_string(q));
  if (k < 2) throw std::domain_error("f_count: k must be >= 2, got " + std::to_string(k));

  const BigInt two_q = pow2(q);
  const BigInt two_w = pow2(w);
  const BigInt h_max = (BigInt(k) * (two_q - 1)) / two_w;  // exact floor

  const auto lower_term = [&](const BigInt& a) -> BigInt {
    return a < 0 ? BigInt(0) : binom(a + k, k);
  };

  BigInt total = 0;
  for (BigInt h = 0; h <= h_max; ++h) {
    const BigInt base = h * two_w;
    for (int j = 0; j <= k; ++j) {
      const BigInt t = lower_term(base - (j - 1) * two_q - 1) - lower_term(base - j * two_q - 1);
      const BigInt c = binom(k, j) * t;
      if (j & 1)
        total -= c;
      else
        total += c;
    }
  }
  return total;
}

inline ExactProb multi_add_rot_prob(int w, int k, int r) {
  validate_rot_distance(r, w);
  if (k < 2) throw std::domain_error("multi_add_rot_prob: k must be >= 2");
  return ExactProb(f_count(r, k, w) * f_count(w - r, k, w), pow2(k * w));
}

namespace detail {

inline BigRat chain_base(int w, int r) {
  const BigRat d = daum_prob(w, r).value();
  return d * BigRat((pow2(r) + 2) * (pow2(w - r) + 2), BigInt(9) * pow2(w));
}

}  // namespace detail

// k=3 closed form, with the boundary correction at r = 1 and r = w-1.
inline ExactProb triple_prob_P(int w, int r) {
  validate_rot_distance(r, w);
  BigRat p = detail::chain_base(w, r);
  if (r == 1 || r == w - 1) {
    const BigInt n = pow2(w - 1);
    const BigInt corr = n >= 3 ? binom(n, 3) : BigInt(0);  // C(n, n-3) via symmetry
    p += BigRat(BigInt(4) * corr, pow2(3 * w));
  }
  return ExactProb(p);
}

// Chained-addition probability: like P but without the boundary indicator.
inline ExactProb chain_prob_K(int w, int r) {
  validate_rot_distance(r, w);
  return ExactProb(detail::chain_base(w, r));
}

inline BoundsPair qr_bounds(int w, int r, BoundVariant variant) {
  const ExactProb d = daum_prob(w, r);
  const ExactProb d3 = d * d * d;
  const ExactProb k = chain_prob_K(w, r);
  const ExactProb low = variant == BoundVariant::chain ? d3 * k : d3 * triple_prob_P(w, r);
  return BoundsPair{low, k * k, variant};
}

// Bounds for i full rounds: each round is four parallel quarter rounds and
// rounds are treated as independent (heuristic), so both ends are raised to
// the 4i-th power, exactly.
inline BoundsPair multi_round_bounds(int w, int r, int rounds, BoundVariant variant) {
  if (rounds < 1) throw std::domain_error("multi_round_bounds: round count must be >= 1");
  const BoundsPair qr = qr_bounds(w, r, variant);
  const auto e = 4ull * (unsigned long long)rounds;
  return BoundsPair{prob_pow(qr.lower, e), prob_pow(qr.upper, e), variant};
}

// Number of k-word strings fixed by parallel rotation: 2^{k*gcd(w,r)}.
inline BigInt fixed_string_count(int w, int k, int r) {
  validate_rot_distance(r, w);
  if (k < 1) throw std::domain_error("fixed_string_count: k must be >= 1");
  return pow2(k * std::gcd(w, r));
}

// Expected rotational collisions of a uniform random permutation of the
// k-word space; a general rational, can exceed 1 (it is 4/3 already on the
// 4-element space).
inline BigRat expected_collisions(int w, int k, int r) {
  validate_rot_distance(r, w);
  if (k < 1) throw std::domain_error("expected_collisions: k must be >= 1");
  const int g = std::gcd(w, r);
  const BigInt space = pow2(w * k);
  return BigRat(space + pow2(2 * k * g) - pow2(k * g + 1), space - 1);
}

}  // namespace rotkit
