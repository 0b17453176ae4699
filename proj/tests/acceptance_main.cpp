// Acceptance gate: the nine checks the library is contractually expected to
// hold, one pass/fail line each.  Runs every criterion by default; pass a
// single number 1..9 to run just that one (the ctest entries do exactly
// that, so a failure is attributable).  Exits nonzero if anything failed.
//
// Tolerances are pinned here, next to the assertions, not read from files:
// exact integer/rational equality wherever the quantity is exact, +/-0.01 on
// the two-decimal log2 table, 3 standard errors on Monte-Carlo estimates,
// and wall-clock ceilings where the contract names one.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rotkit/rotkit.hpp"

using namespace rotkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// Accumulates failure notes; empty means the criterion passed.
struct Check {
  std::string fail;
  int checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (!fail.empty()) fail += "; ";
    fail += what;
  }
  bool passed() const { return fail.empty(); }
};

// Table 1 census rows computed the slow, honest way.  Shared between
// criteria 1 and 6 so an all-criteria run sweeps the w=6 space once.
const std::vector<Table1Row>& real_table1() {
  static const std::vector<Table1Row> rows = compute_table1();
  return rows;
}

// --- criterion 1: exhaustive Table 1 collision counts ----------------------

bool criterion1(std::string& detail) {
  const auto t0 = Clock::now();
  const std::uint64_t expected[7] = {747, 388, 8917, 3405, 123317, 39482, 32628};
  const auto& rows = real_table1();
  Check c;
  c.expect(rows.size() == 7, "expected 7 rows");
  for (size_t i = 0; i < rows.size() && i < 7; ++i) {
    c.expect(!rows[i].from_cache, "row " + std::to_string(i) + " not exhaustively computed");
    c.expect(rows[i].count == expected[i],
             "row " + std::to_string(i) + ": count " + std::to_string(rows[i].count) +
                 " != " + std::to_string(expected[i]));
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 60.0, "runtime " + fmt_secs(secs) + " exceeds 60 s");
  detail = c.passed() ? "7/7 exhaustive counts exact, " + fmt_secs(secs) : c.fail;
  return c.passed();
}

// --- criterion 2: Table 1 bound columns to 5 decimals ----------------------

bool criterion2(std::string& detail) {
  const char* expected[7][2] = {{"0.00880", "0.01373"}, {"0.00582", "0.00954"},
                                {"0.00630", "0.00992"}, {"0.00318", "0.00536"},
                                {"0.00528", "0.00834"}, {"0.00228", "0.00388"},
                                {"0.00174", "0.00302"}};
  const auto configs = table1_configs();
  Check c;
  for (size_t i = 0; i < configs.size(); ++i) {
    const auto& [params, r] = configs[i];
    const BoundsPair b = qr_bounds(params.w(), r, BoundVariant::chain);
    const std::string lo = decimal_string(b.lower.value(), 5);
    const std::string hi = decimal_string(b.upper.value(), 5);
    c.expect(lo == expected[i][0], "w=" + std::to_string(params.w()) + ",r=" + std::to_string(r) +
                                       " lower " + lo + " != " + expected[i][0]);
    c.expect(hi == expected[i][1], "w=" + std::to_string(params.w()) + ",r=" + std::to_string(r) +
                                       " upper " + hi + " != " + expected[i][1]);
  }
  detail = c.passed() ? "7/7 chain bound pairs match to 5 decimals" : c.fail;
  return c.passed();
}

// --- criterion 3: 20-row multi-round bound table ----------------------------

bool criterion3(std::string& detail) {
  // Magnitudes of (log2 lower, log2 upper) per round at w=32, r=1.
  const double expected[20][2] = {
      {27.32, 28.68},   {54.64, 57.36},   {81.96, 86.04},   {109.28, 114.72}, {136.60, 143.40},
      {163.92, 172.08}, {191.24, 200.76}, {218.56, 229.44}, {245.88, 258.12}, {273.20, 286.80},
      {300.52, 315.48}, {327.84, 344.16}, {355.16, 372.84}, {382.48, 401.52}, {409.80, 430.20},
      {437.12, 458.88}, {464.45, 487.55}, {491.77, 516.23}, {519.09, 544.91}, {546.41, 573.59}};
  const auto t0 = Clock::now();
  const auto rows = compute_table2(1, 20, BoundVariant::corrected, 32);
  Check c;
  c.expect(rows.size() == 20, "expected 20 rows");
  for (size_t i = 0; i < rows.size() && i < 20; ++i) {
    const double lo = -log2_value(rows[i].bounds.lower.value());
    const double hi = -log2_value(rows[i].bounds.upper.value());
    char buf[96];
    if (std::abs(lo - expected[i][0]) > 0.01 + 1e-9) {
      std::snprintf(buf, sizeof buf, "round %zu lower 2^-%.2f != 2^-%.2f", i + 1, lo,
                    expected[i][0]);
      c.expect(false, buf);
    }
    if (std::abs(hi - expected[i][1]) > 0.01 + 1e-9) {
      std::snprintf(buf, sizeof buf, "round %zu upper 2^-%.2f != 2^-%.2f", i + 1, hi,
                    expected[i][1]);
      c.expect(false, buf);
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime " + fmt_secs(secs) + " exceeds 1 s");
  detail = c.passed() ? "20/20 rows within +/-0.01, " + fmt_secs(secs) : c.fail;
  return c.passed();
}

// --- criterion 4: closed formulas equal brute-force censuses ----------------

bool criterion4(std::string& detail) {
  Check c;
  // k-addend probability times the space size is exactly the census count.
  for (int w = 3; w <= 5; ++w)
    for (int k = 2; k <= 4; ++k)
      for (int r = 1; r < w; ++r) {
        const BigRat lhs = multi_add_rot_prob(w, k, r).value() * BigRat(pow2(k * w));
        const BigRat rhs = BigRat(BigInt(addition_census(w, k, r).count));
        c.expect(lhs == rhs, "multi_add w=" + std::to_string(w) + ",k=" + std::to_string(k) +
                                 ",r=" + std::to_string(r));
      }
  // The two-addend closed form is the k=2 census everywhere it fits.
  for (int w = 2; w <= 8; ++w)
    for (int r = 1; r < w; ++r)
      c.expect(daum_prob(w, r) == addition_census(w, 2, r).probability,
               "daum w=" + std::to_string(w) + ",r=" + std::to_string(r));
  // Chain probability against the joint-event census.
  for (int w = 2; w <= 6; ++w)
    for (int r = 1; r < w; ++r) {
      const BigRat lhs = chain_prob_K(w, r).value() * BigRat(pow2(3 * w));
      const BigRat rhs = BigRat(BigInt(chain_census(w, r).count));
      c.expect(lhs == rhs, "chain w=" + std::to_string(w) + ",r=" + std::to_string(r));
    }
  detail = c.passed() ? std::to_string(c.checks) + " formula/census identities, zero tolerance"
                      : c.fail;
  return c.passed();
}

// --- criterion 5: per-word conditions are exactly the collision event -------

bool criterion5(std::string& detail) {
  Check c;
  for (const auto& [params, r] : table1_configs()) {
    const std::uint64_t collisions = qr_census(params, r).count;
    const std::uint64_t conditions = condition_census(params, r).count;
    c.expect(collisions == conditions, "w=" + std::to_string(params.w()) +
                                           ",r=" + std::to_string(r) + ": " +
                                           std::to_string(conditions) + " conditions vs " +
                                           std::to_string(collisions) + " collisions");
  }
  // The census never depends on the final rotation distance.
  const QuarterRoundParams base{WordSpec{4}, 1, 3, 2, 1};
  for (int r4 : {2, 3}) {
    const QuarterRoundParams tweaked{WordSpec{4}, 1, 3, 2, r4};
    for (int r = 1; r < 4; ++r)
      c.expect(qr_census(base, r).count == qr_census(tweaked, r).count,
               "r4=" + std::to_string(r4) + " changed the census at r=" + std::to_string(r));
  }
  const QuarterRoundParams w5a{WordSpec{5}, 4, 3, 2, 1}, w5b{WordSpec{5}, 4, 3, 2, 4};
  c.expect(qr_census(w5a, 2).count == qr_census(w5b, 2).count, "r4 changed the w=5 census");
  detail = c.passed() ? "condition census = collision census on all 7 rows; r4 inert" : c.fail;
  return c.passed();
}

// --- criterion 6: bounds sandwich the measurement; bad bound is caught ------

bool criterion6(std::string& detail) {
  Check c;
  for (const auto& row : real_table1()) {
    const BigRat measured = row.measured;
    c.expect(row.bounds.lower.value() <= measured && measured <= row.bounds.upper.value(),
             "w=" + std::to_string(row.params.w()) + ",r=" + std::to_string(row.r) +
                 " not sandwiched");
  }
  // The corrected variant's lower bound at w=4, r=1 comes out ABOVE the
  // exhaustive measurement (216513/2^24 ~ 0.01291 vs 747/65536 ~ 0.01140).
  // That contradiction is real, and the suite is required to detect it
  // rather than paper over it.
  const BoundsPair corrected = qr_bounds(4, 1, BoundVariant::corrected);
  const BigRat measured_w4(747, 65536);
  c.expect(corrected.lower == ExactProb(216513, 16777216),
           "corrected lower is not the documented 216513/2^24");
  c.expect(decimal_string(corrected.lower.value(), 5) == "0.01291",
           "corrected lower does not render as 0.01291");
  c.expect(corrected.lower.value() > measured_w4,
           "expected the corrected lower bound to exceed the measurement");
  detail = c.passed() ? "chain bounds sandwich all 7 measurements; corrected-variant "
                        "contradiction detected at w=4,r=1"
                      : c.fail;
  return c.passed();
}

// --- criterion 7: random-permutation collision expectations -----------------

bool criterion7(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;

  // All 24 permutations of the 2-bit space, counted by hand: for each sigma,
  // how many x have sigma(rot x) = rot sigma(x)?
  {
    std::array<int, 4> sigma = {0, 1, 2, 3};
    const auto rot1 = [](int x) { return ((x << 1) | (x >> 1)) & 3; };
    std::uint64_t perms = 0, collisions = 0;
    do {
      ++perms;
      for (int x = 0; x < 4; ++x)
        collisions += sigma[(size_t)rot1(x)] == rot1(sigma[(size_t)x]);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    c.expect(perms == 24, "expected 24 permutations");
    c.expect(collisions == 32, "enumeration found " + std::to_string(collisions) +
                                   " collisions, expected 32");
    c.expect(expected_collisions(2, 1, 1) == BigRat(BigInt(collisions), BigInt(perms)),
             "closed form disagrees with the 24-permutation enumeration");
    c.expect(expected_collisions(2, 1, 1) == BigRat(4, 3), "expected 4/3");
  }

  // The 16-element space is too big to enumerate; Monte-Carlo instead.
  c.expect(expected_collisions(2, 2, 1) == BigRat(8, 5), "expected 8/5");
  const PermCollisionEstimate mc = random_perm_collision_mc(2, 2, 1, 100000, 20250822);
  const double err = std::abs(mc.mean - 1.6);
  c.expect(err <= 3.0 * mc.std_error, "MC mean off by " + std::to_string(err) + " > 3 SE");

  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime " + fmt_secs(secs) + " exceeds 30 s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "4/3 by enumeration, 8/5 by %llu-trial MC (mean %.4f), %s",
                (unsigned long long)mc.trials, mc.mean, fmt_secs(secs).c_str());
  detail = c.passed() ? buf : c.fail;
  return c.passed();
}

// --- criterion 8: the scaled distinguishing game ----------------------------

bool criterion8(std::string& detail) {
  const auto t0 = Clock::now();
  Check c;

  const BoundsPair b = qr_bounds(4, 1, BoundVariant::chain);
  const std::uint64_t budget = default_budget(b.upper);
  c.expect(budget == 365, "default budget " + std::to_string(budget) + " != 365");

  TrialConfig cfg;
  cfg.arx.kind = OracleKind::quarter_round_perm;
  cfg.arx.params = QuarterRoundParams{WordSpec{4}, 1, 3, 2, 1};
  cfg.rot = 1;
  cfg.budget = budget;
  cfg.trials = 500;
  cfg.seed = 8;
  const TrialStats st = run_trials(cfg);

  char buf[128];
  std::snprintf(buf, sizeof buf, "TPR %.3f FPR %.3f advantage %.3f", st.tpr, st.fpr, st.advantage);
  c.expect(st.tpr >= 0.95, std::string("TPR too low: ") + buf);
  c.expect(st.fpr <= 0.05, std::string("FPR too high: ") + buf);
  c.expect(st.advantage >= 0.90, std::string("advantage too low: ") + buf);

  const double secs = seconds_since(t0);
  c.expect(secs < 10.0, "runtime " + fmt_secs(secs) + " exceeds 10 s");
  detail = c.passed() ? std::string(buf) + " over 500 trials at N=365, " + fmt_secs(secs) : c.fail;
  return c.passed();
}

// --- criterion 9: structural sanity ------------------------------------------

bool criterion9(std::string& detail) {
  Check c;

  // Exhaustive bijectivity at w=4: every output vector hit exactly once.
  {
    const rotkit::detail::QrKernel kernel(QuarterRoundParams{WordSpec{4}, 1, 3, 2, 1});
    std::vector<bool> seen(1u << 16, false);
    bool dup = false;
    for (std::uint32_t packed = 0; packed < (1u << 16); ++packed) {
      const WordVec4 y = kernel.qr(WordVec4{packed & 15, (packed >> 4) & 15, (packed >> 8) & 15,
                                            (packed >> 12) & 15});
      const std::uint32_t out = y[0] | y[1] << 4 | y[2] << 8 | y[3] << 12;
      if (seen[out]) dup = true;
      seen[out] = true;
    }
    c.expect(!dup, "quarter round is not injective at w=4");
  }

  // Inverse round-trip at full width.
  {
    const QuarterRoundParams p32{};
    SplitMix64 gen(909);
    bool ok = true;
    for (int t = 0; t < 100000 && ok; ++t) {
      WordVec4 x;
      for (auto& v : x) v = (std::uint32_t)gen.bits(32);
      ok = inverse_quarter_round(p32, quarter_round(p32, x)) == x;
    }
    c.expect(ok, "inverse round-trip failed at w=32");
  }

  // The zero state is a fixed point of every round count up to 20.
  {
    const QuarterRoundParams p32{};
    const State zero{};
    bool fixed = true;
    for (int rounds = 0; rounds <= 20; ++rounds)
      fixed = fixed && permute_rounds(p32, zero, rounds) == zero;
    c.expect(fixed, "zero state moved");
  }

  // Same census regardless of how the range is split across workers.
  {
    const QuarterRoundParams w5{WordSpec{5}, 4, 3, 2, 1};
    std::set<std::uint64_t> counts;
    for (int threads : {1, 2, 8}) {
      SearchOptions opts;
      opts.threads = threads;
      counts.insert(qr_census(w5, 1, opts).count);
    }
    c.expect(counts.size() == 1, "census depends on the worker count");
  }

  detail = c.passed() ? "bijective at w=4; inverse holds at w=32; zero fixed through 20 "
                        "rounds; census worker-invariant"
                      : c.fail;
  return c.passed();
}

}  // namespace

int main(int argc, char** argv) {
  struct Entry {
    int id;
    bool (*run)(std::string&);
  };
  const Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3},
                           {4, criterion4}, {5, criterion5}, {6, criterion6},
                           {7, criterion7}, {8, criterion8}, {9, criterion9}};

  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1..9]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  for (const Entry& e : entries) {
    if (only && e.id != only) continue;
    std::string detail;
    const bool ok = e.run(detail);
    failures += !ok;
    std::printf("criterion %d: %s — %s\n", e.id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
