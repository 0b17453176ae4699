#pragma once
// Exhaustive and sampled experiments: the independent measurement side of
// the toolkit, against which the closed forms in bounds.hpp are checked.
//
// Exhaustive censuses sweep a packed index space (word j of an input is
// bit-slice [j*w, (j+1)*w) of the index), partitioned into contiguous
// ranges across workers; per-range counts are summed, so results are
// identical for any worker count.  Each census carries a size guard with
// a force override: the guard exists to keep default runs at desk scale,
// not to encode a hard limit.
//
// Sampled experiments draw from the documented splitmix64 stream; samples
// are grouped into fixed-size blocks, block b seeded with substream b of
// the master seed, so hit counts are reproducible regardless of how many
// workers happen to pick up the blocks.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "rotkit/bounds.hpp"
#include "rotkit/errors.hpp"
#include "rotkit/prng.hpp"
#include "rotkit/quarter_round.hpp"
#include "rotkit/rational.hpp"
#include "rotkit/state.hpp"
#include "rotkit/stats.hpp"
#include "rotkit/words.hpp"

namespace rotkit {

struct SearchOptions {
  int threads = 0;   // <= 0: use hardware concurrency
  bool force = false;
};

struct CensusConfig {
  std::string mode;
  int w = 0;
  std::optional<std::array<int, 4>> rots;  // quarter-round constants, where applicable
  std::optional<int> k;                    // addend count, where applicable
  int rot = 0;
};

struct CensusResult {
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  ExactProb probability;
  CensusConfig config;
};

struct SampledEstimate {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  double lower = 0.0, upper = 1.0;  // 95% Wilson
  std::uint64_t seed = 0;
};

// Monte-Carlo collision counts over random permutations.  Not a
// SampledEstimate: the per-trial statistic C is a count that routinely
// exceeds 1 (its expectation is 4/3 already on the 4-element space), so
// "hits <= samples" and a Wilson interval would both be wrong here.  The
// interval is the usual normal approximation from the sample variance.
struct PermCollisionEstimate {
  std::uint64_t trials = 0;
  std::uint64_t total_collisions = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double lower = 0.0, upper = 0.0;  // mean +/- 1.96 * std_error
  std::uint64_t seed = 0;
  int space_bits = 0;
};

namespace detail {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

// Sum body(lo, hi) over a disjoint contiguous partition of [0, total).
template <typename Body>
std::uint64_t parallel_range_sum(std::uint64_t total, int threads, Body&& body) {
  const int t = (int)std::max<std::int64_t>(
      1, std::min<std::int64_t>(resolve_threads(threads),
                                (std::int64_t)std::min<std::uint64_t>(total, 256)));
  if (t <= 1 || total < (1u << 16)) return body(0, total);
  const std::uint64_t chunk = (total + t - 1) / t;
  std::vector<std::uint64_t> partial((size_t)t, 0);
  std::vector<std::thread> pool;
  pool.reserve((size_t)t);
  for (int i = 0; i < t; ++i) {
    const std::uint64_t lo = chunk * (std::uint64_t)i;
    if (lo >= total) break;
    const std::uint64_t hi = std::min(total, lo + chunk);
    pool.emplace_back([&partial, &body, i, lo, hi] { partial[(size_t)i] = body(lo, hi); });
  }
  for (auto& th : pool) th.join();
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

// Shared guard logic: refuse spaces that cannot even be indexed, then apply
// the desk-scale guard (force skips only the latter).
inline std::uint64_t census_space(const std::string& what, const std::string& guard_expr,
                                  int bits, int limit, bool force) {
  if (bits > 62)
    throw InfeasibleSizeError(what + ": exhaustive sweep over 2^" + std::to_string(bits) +
                              " inputs is infeasible at any setting");
  check_space_guard(what, guard_expr, bits, limit, force);
  return std::uint64_t{1} << bits;
}

}  // namespace detail

// #{x in (F_2^w)^4 : Q(x <<< r) = Q(x) <<< r}, exhaustively.
inline CensusResult qr_census(const QuarterRoundParams& p, int r, SearchOptions opts = {}) {
  p.validate();
  validate_rot_distance(r, p.w());
  const int w = p.w();
  const std::uint64_t total = detail::census_space("qr-census", "4*w <= 28", 4 * w, 28, opts.force);
  const detail::QrKernel k(p);
  const std::uint32_t m = k.mask;

  const std::uint64_t count = detail::parallel_range_sum(total, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t c = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const WordVec4 x{(std::uint32_t)i & m, (std::uint32_t)(i >> w) & m,
                       (std::uint32_t)(i >> 2 * w) & m, (std::uint32_t)(i >> 3 * w) & m};
      const WordVec4 xr{k.rot(x[0], r), k.rot(x[1], r), k.rot(x[2], r), k.rot(x[3], r)};
      const WordVec4 y = k.qr(x);
      const WordVec4 yr = k.qr(xr);
      c += k.rot(y[0], r) == yr[0] && k.rot(y[1], r) == yr[1] &&
           k.rot(y[2], r) == yr[2] && k.rot(y[3], r) == yr[3];
    }
    return c;
  });

  return CensusResult{count, total, ExactProb(BigInt(count), BigInt(total)),
                      CensusConfig{"qr-collision", w, {{p.r1, p.r2, p.r3, p.r4}}, std::nullopt, r}};
}

// Counts inputs on which the four add/rotate commutation equalities hold:
// on (x0,x1), (b3,x2), (b0,b1) and (y3,b2), with b-values from the trace
// of the UNROTATED input.  Equals qr_census input-for-input.
inline CensusResult condition_census(const QuarterRoundParams& p, int r, SearchOptions opts = {}) {
  p.validate();
  validate_rot_distance(r, p.w());
  const int w = p.w();
  const std::uint64_t total =
      detail::census_space("condition-census", "4*w <= 28", 4 * w, 28, opts.force);
  const detail::QrKernel k(p);
  const std::uint32_t m = k.mask;

  const std::uint64_t count = detail::parallel_range_sum(total, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    const auto commutes = [&](std::uint32_t a, std::uint32_t b) {
      return ((k.rot(a, r) + k.rot(b, r)) & m) == k.rot((a + b) & m, r);
    };
    std::uint64_t c = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const WordVec4 x{(std::uint32_t)i & m, (std::uint32_t)(i >> w) & m,
                       (std::uint32_t)(i >> 2 * w) & m, (std::uint32_t)(i >> 3 * w) & m};
      const QrTrace t = k.trace(x);
      c += commutes(x[0], x[1]) && commutes(t.b3, x[2]) && commutes(t.b0, t.b1) &&
           commutes(t.y[3], t.b2);
    }
    return c;
  });

  return CensusResult{count, total, ExactProb(BigInt(count), BigInt(total)),
                      CensusConfig{"condition", w, {{p.r1, p.r2, p.r3, p.r4}}, std::nullopt, r}};
}

// #{(a_1..a_k) : (a_1<<<r) + ... + (a_k<<<r) = (a_1 + ... + a_k) <<< r}.
inline CensusResult addition_census(int w, int k, int r, SearchOptions opts = {}) {
  validate_rot_distance(r, w);
  if (k < 2) throw std::domain_error("addition_census: k must be >= 2");
  const std::uint64_t total =
      detail::census_space("addition-census", "k*w <= 28", k * w, 28, opts.force);
  const std::uint32_t m = WordSpec{w}.mask();

  const std::uint64_t count = detail::parallel_range_sum(total, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t c = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      std::uint32_t sum = 0, rot_sum = 0;
      for (int j = 0; j < k; ++j) {
        const std::uint32_t a = (std::uint32_t)(i >> (j * w)) & m;
        sum = (sum + a) & m;
        rot_sum = (rot_sum + detail::rotl_raw(a, r, w, m)) & m;
      }
      c += rot_sum == detail::rotl_raw(sum, r, w, m);
    }
    return c;
  });

  return CensusResult{count, total, ExactProb(BigInt(count), BigInt(total)),
                      CensusConfig{"addition", w, std::nullopt, k, r}};
}

// Chained event over triples: BOTH the 2-addend and the 3-addend
// commutation equalities hold.  Sub-event of addition_census(w, 3, r).
inline CensusResult chain_census(int w, int r, SearchOptions opts = {}) {
  validate_rot_distance(r, w);
  const std::uint64_t total = detail::census_space("chain-census", "3*w <= 28", 3 * w, 28, opts.force);
  const std::uint32_t m = WordSpec{w}.mask();

  const std::uint64_t count = detail::parallel_range_sum(total, opts.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    const auto rot = [&](std::uint32_t v) { return detail::rotl_raw(v, r, w, m); };
    std::uint64_t c = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const std::uint32_t a1 = (std::uint32_t)i & m;
      const std::uint32_t a2 = (std::uint32_t)(i >> w) & m;
      const std::uint32_t a3 = (std::uint32_t)(i >> 2 * w) & m;
      const std::uint32_t s2 = (a1 + a2) & m;
      const std::uint32_t s3 = (s2 + a3) & m;
      const bool two = ((rot(a1) + rot(a2)) & m) == rot(s2);
      const bool three = ((rot(a1) + rot(a2) + rot(a3)) & m) == rot(s3);
      c += two && three;
    }
    return c;
  });

  return CensusResult{count, total, ExactProb(BigInt(count), BigInt(total)),
                      CensusConfig{"chain", w, std::nullopt, 3, r}};
}

// Monte-Carlo probe of the full-state round collision: draw uniform states
// X, count (R^i(X)) <<< r == R^i(X <<< r).  Block-seeded, so the result
// depends only on (seed, samples), not on the worker count.
inline SampledEstimate sampled_round_census(const QuarterRoundParams& p, int r, int rounds,
                                            std::uint64_t samples, std::uint64_t seed,
                                            SearchOptions opts = {}) {
  p.validate();
  validate_rot_distance(r, p.w());
  if (rounds < 0) throw std::domain_error("sampled_round_census: rounds must be >= 0");
  if (samples < 1) throw std::domain_error("sampled_round_census: samples must be >= 1");

  const detail::QrKernel k(p);
  const int w = p.w();
  constexpr std::uint64_t kBlock = 1u << 16;
  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  const int nthreads = (int)std::max<std::int64_t>(
      1, std::min<std::int64_t>(detail::resolve_threads(opts.threads),
                                (std::int64_t)std::min<std::uint64_t>(blocks, 256)));

  std::atomic<std::uint64_t> next_block{0};
  std::vector<std::uint64_t> partial((size_t)nthreads, 0);
  const auto worker = [&](int id) {
    std::uint64_t local = 0;
    for (std::uint64_t b; (b = next_block.fetch_add(1)) < blocks;) {
      SplitMix64 gen(substream_seed(seed, b));
      const std::uint64_t n = std::min(kBlock, samples - b * kBlock);
      for (std::uint64_t s = 0; s < n; ++s) {
        State x;
        for (int j = 0; j < 16; ++j) x.v[j] = (std::uint32_t)gen.bits(w);
        State xr;
        for (int j = 0; j < 16; ++j) xr.v[j] = k.rot(x.v[j], r);
        for (int i = 0; i < rounds; ++i) {
          const RoundKind kind = (i & 1) == 0 ? RoundKind::column : RoundKind::diagonal;
          x = detail::round_with(k, x, kind);
          xr = detail::round_with(k, xr, kind);
        }
        bool hit = true;
        for (int j = 0; j < 16; ++j) hit &= k.rot(x.v[j], r) == xr.v[j];
        local += hit;
      }
    }
    partial[(size_t)id] = local;
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve((size_t)nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }

  const std::uint64_t hits = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  const Interval iv = wilson_95(hits, samples);
  return SampledEstimate{hits, samples, (double)hits / (double)samples, iv.lo, iv.hi, seed};
}

// Mean rotational-collision count over uniformly drawn permutations of the
// whole k-word space (seeded Fisher-Yates).  Space is capped hard: the
// permutation is materialized per trial.
inline PermCollisionEstimate random_perm_collision_mc(int w, int k, int r, std::uint64_t trials,
                                                      std::uint64_t seed, SearchOptions opts = {}) {
  validate_rot_distance(r, w);
  if (k < 1) throw std::domain_error("random_perm_collision_mc: k must be >= 1");
  if (trials < 1) throw std::domain_error("random_perm_collision_mc: trials must be >= 1");
  const int space_bits = w * k;
  detail::check_space_guard("random-perm-mc", "w*k <= 20", space_bits, 20, opts.force);
  if (space_bits > 26)
    throw InfeasibleSizeError("random-perm-mc: materializing 2^" + std::to_string(space_bits) +
                              "-element permutations per trial is infeasible");
  const std::uint32_t n = std::uint32_t{1} << space_bits;
  const std::uint32_t m = WordSpec{w}.mask();

  const auto rot_packed = [&](std::uint32_t x) {
    std::uint32_t out = 0;
    for (int j = 0; j < k; ++j)
      out |= detail::rotl_raw((x >> (j * w)) & m, r, w, m) << (j * w);
    return out;
  };

  const int nthreads = (int)std::max<std::int64_t>(
      1, std::min<std::int64_t>(detail::resolve_threads(opts.threads),
                                (std::int64_t)std::min<std::uint64_t>(trials, 256)));
  std::atomic<std::uint64_t> next_trial{0};
  std::vector<std::uint64_t> sum_c((size_t)nthreads, 0), sum_c2((size_t)nthreads, 0);

  const auto worker = [&](int id) {
    std::vector<std::uint32_t> perm((size_t)n);
    std::uint64_t s1 = 0, s2 = 0;
    for (std::uint64_t t; (t = next_trial.fetch_add(1)) < trials;) {
      SplitMix64 gen(substream_seed(seed, t));
      std::iota(perm.begin(), perm.end(), 0u);
      for (std::uint32_t i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[(size_t)gen.below(i + 1)]);
      std::uint64_t c = 0;
      for (std::uint32_t x = 0; x < n; ++x)
        c += perm[rot_packed(x)] == rot_packed(perm[x]);
      s1 += c;
      s2 += c * c;
    }
    sum_c[(size_t)id] = s1;
    sum_c2[(size_t)id] = s2;
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve((size_t)nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }

  const std::uint64_t s1 = std::accumulate(sum_c.begin(), sum_c.end(), std::uint64_t{0});
  const std::uint64_t s2 = std::accumulate(sum_c2.begin(), sum_c2.end(), std::uint64_t{0});
  const double nt = (double)trials;
  const double mean = (double)s1 / nt;
  double se = 0.0;
  if (trials > 1) {
    const double var = ((double)s2 - nt * mean * mean) / (nt - 1.0);
    se = std::sqrt(std::max(0.0, var) / nt);
  }
  return PermCollisionEstimate{trials, s1,   mean, se, mean - kZ95 * se, mean + kZ95 * se,
                               seed,   space_bits};
}

}  // namespace rotkit
