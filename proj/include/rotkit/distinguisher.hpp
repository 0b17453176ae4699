#pragma once
// The toy-scale distinguishing game: decide whether an oracle runs an ARX
// permutation or a random permutation by hunting for parallel rotational
// collisions.
//
// One game: draw up to N uniform nonzero inputs X, query Y = O(X) and
// Z = O(X <<< r); answer "chacha" on the first i with Y_i <<< r = Z_i
// (early stop), "random" if the budget runs out.  At most 2N oracle calls.
// The all-zero input is excluded because every oracle in play fixes 0
// (ARX by construction, random by pin_zero), making it a collision with
// zero distinguishing information.
//
// run_trials plays the game many times against BOTH oracle kinds with
// seeds derived per trial from the master seed; TPR is the chacha-oracle
// detection rate, FPR the random-oracle false-alarm rate, advantage their
// difference.  Trials are scheduled across workers but each outcome lands
// in its own slot, so results depend only on (config, master seed).

#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "rotkit/bounds.hpp"
#include "rotkit/census.hpp"  // detail::resolve_threads
#include "rotkit/oracle.hpp"
#include "rotkit/prng.hpp"
#include "rotkit/stats.hpp"

namespace rotkit {

enum class Decision { chacha, random };

struct DistinguisherVerdict {
  std::uint64_t budget = 0;      // N: maximum query pairs
  std::uint64_t collisions = 0;  // collisions seen before stopping (0 or 1)
  std::uint64_t queries = 0;     // oracle calls actually issued, <= 2N
  Decision decision = Decision::random;
  std::optional<std::vector<std::uint32_t>> witness;  // the colliding X, for re-checking
  std::uint64_t seed = 0;
};

inline DistinguisherVerdict run_distinguisher(PermutationOracle& oracle, int r,
                                              std::uint64_t budget, std::uint64_t seed) {
  const int w = oracle.word_bits();
  const int k = oracle.word_count();
  validate_rot_distance(r, w);
  const std::uint32_t m = WordSpec{w}.mask();

  DistinguisherVerdict v;
  v.budget = budget;
  v.seed = seed;

  SplitMix64 gen(seed);
  std::vector<std::uint32_t> x((size_t)k), xr((size_t)k), y((size_t)k), z((size_t)k);
  const std::uint64_t base = oracle.queries();

  for (std::uint64_t i = 0; i < budget; ++i) {
    bool zero = true;
    do {
      zero = true;
      for (int j = 0; j < k; ++j) {
        x[(size_t)j] = (std::uint32_t)gen.bits(w);
        zero &= x[(size_t)j] == 0;
      }
    } while (zero);
    for (int j = 0; j < k; ++j) xr[(size_t)j] = detail::rotl_raw(x[(size_t)j], r, w, m);

    oracle.query(x, y);
    oracle.query(xr, z);

    bool collision = true;
    for (int j = 0; j < k; ++j)
      collision &= detail::rotl_raw(y[(size_t)j], r, w, m) == z[(size_t)j];
    if (collision) {
      v.collisions = 1;
      v.decision = Decision::chacha;
      v.witness = x;
      break;
    }
  }
  v.queries = oracle.queries() - base;
  return v;
}

// Default query-pair budget: ceil(c / upper), where upper is the collision
// upper bound of the permutation under test.  c = 1 mirrors the minimal
// analysis budget; the desk-scale default c = 5 pushes single-game
// detection to ~99% so acceptance thresholds have headroom.
inline constexpr std::uint64_t kDefaultBudgetFactor = 5;

inline std::uint64_t default_budget(const ExactProb& upper, std::uint64_t c = kDefaultBudgetFactor) {
  if (upper.num() == 0) throw std::domain_error("default_budget: upper bound must be positive");
  const BigInt q = (BigInt(c) * upper.den() + upper.num() - 1) / upper.num();
  return q.convert_to<std::uint64_t>();
}

struct TrialOutcome {
  std::uint64_t trial = 0;
  OracleKind kind = OracleKind::quarter_round_perm;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t collisions = 0;
  Decision decision = Decision::random;
};

struct TrialConfig {
  OracleSpec arx;            // quarter_round_perm or chacha_perm
  int rot = 1;
  std::uint64_t budget = 0;  // query pairs per game
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;    // master seed
  int threads = 0;
};

struct TrialStats {
  std::uint64_t trials = 0;
  std::uint64_t budget = 0;
  std::uint64_t true_positives = 0;   // chacha oracle detected
  std::uint64_t false_positives = 0;  // random oracle misclassified
  double tpr = 0.0, fpr = 0.0, advantage = 0.0;
  Interval tpr_ci{}, fpr_ci{};  // exact binomial (Clopper-Pearson) 95%
  std::uint64_t seed = 0;
  std::vector<TrialOutcome> outcomes;  // 2 per trial, arx then random
};

inline TrialStats run_trials(const TrialConfig& cfg) {
  if (cfg.trials < 1) throw std::domain_error("run_trials: trials must be >= 1");
  if (cfg.arx.kind == OracleKind::random_perm)
    throw std::domain_error("run_trials: the configured oracle must be an ARX kind");
  cfg.arx.params.validate();
  validate_rot_distance(cfg.rot, cfg.arx.params.w());

  const int words = cfg.arx.kind == OracleKind::quarter_round_perm ? 4 : 16;

  TrialStats stats;
  stats.trials = cfg.trials;
  stats.budget = cfg.budget;
  stats.seed = cfg.seed;
  stats.outcomes.resize((size_t)(2 * cfg.trials));

  std::atomic<std::uint64_t> next{0};
  const int nthreads = (int)std::max<std::int64_t>(
      1, std::min<std::int64_t>(detail::resolve_threads(cfg.threads),
                                (std::int64_t)std::min<std::uint64_t>(cfg.trials, 256)));

  const auto worker = [&] {
    for (std::uint64_t t; (t = next.fetch_add(1)) < cfg.trials;) {
      // Three substreams per trial: the sampler against the ARX oracle,
      // the random oracle's own table, the sampler against it.
      const std::uint64_t arx_sampler = substream_seed(cfg.seed, 3 * t);
      const std::uint64_t rand_oracle = substream_seed(cfg.seed, 3 * t + 1);
      const std::uint64_t rand_sampler = substream_seed(cfg.seed, 3 * t + 2);

      auto arx = make_oracle(cfg.arx);
      const DistinguisherVerdict va = run_distinguisher(*arx, cfg.rot, cfg.budget, arx_sampler);
      stats.outcomes[(size_t)(2 * t)] =
          TrialOutcome{t, cfg.arx.kind, arx_sampler, cfg.budget, va.collisions, va.decision};

      OracleSpec rnd;
      rnd.kind = OracleKind::random_perm;
      rnd.params.spec = cfg.arx.params.spec;
      rnd.word_count = words;
      rnd.pin_zero = true;
      rnd.seed = rand_oracle;
      auto random_oracle = make_oracle(rnd);
      const DistinguisherVerdict vr =
          run_distinguisher(*random_oracle, cfg.rot, cfg.budget, rand_sampler);
      stats.outcomes[(size_t)(2 * t + 1)] =
          TrialOutcome{t, OracleKind::random_perm, rand_sampler, cfg.budget, vr.collisions, vr.decision};
    }
  };

  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve((size_t)nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    stats.true_positives += stats.outcomes[(size_t)(2 * t)].decision == Decision::chacha;
    stats.false_positives += stats.outcomes[(size_t)(2 * t + 1)].decision == Decision::chacha;
  }
  stats.tpr = (double)stats.true_positives / (double)cfg.trials;
  stats.fpr = (double)stats.false_positives / (double)cfg.trials;
  stats.advantage = stats.tpr - stats.fpr;
  stats.tpr_ci = clopper_pearson_95(stats.true_positives, cfg.trials);
  stats.fpr_ci = clopper_pearson_95(stats.false_positives, cfg.trials);
  return stats;
}

}  // namespace rotkit
