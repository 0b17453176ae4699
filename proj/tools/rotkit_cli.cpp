// rotkit: command-line front end over the library.
//
// Twelve subcommands, each a thin dispatch to one library call plus the
// shared rendering layer.  Exit codes: 0 success, 1 usage or domain error,
// 2 when a size guard refuses the search (pass --force to override the
// soft guards; the hard caps stay).
//
// Flag grammar (shared across subcommands where meaningful):
//   --word-bits <int>   --rots r1,r2,r3,r4   --rot <int>
//   --rounds <int|A-B>  --variant chain|corrected
//   --k <int> --budget <int> --trials <int> --seed <u64> --samples <int>
//   --format text|json|csv  --threads <int>  --force
//
// Text layouts and CSV column orders are documented in the README; JSON
// documents carry a versioned "schema" field and round-trip bytewise.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotkit/rotkit.hpp"

using namespace rotkit;

namespace {

// ---------------------------------------------------------------------------
// flag plumbing

std::array<int, 4> default_rots(int w) {
  // The conventions used throughout: ChaCha's constants at full width, the
  // toy assignments from the measured tables below that.
  if (w == 32) return {16, 12, 8, 7};
  if (w >= 5) return {w - 1, 3, 2, 1};
  if (w == 4) return {1, 3, 2, 1};
  if (w == 3) return {1, 2, 1, 2};
  return {1, 1, 1, 1};
}

std::array<int, 4> parse_rots(const std::string& text) {
  std::array<int, 4> r{};
  char extra;
  if (std::sscanf(text.c_str(), "%d,%d,%d,%d%c", &r[0], &r[1], &r[2], &r[3], &extra) != 4)
    throw CLI::ValidationError("--rots", "expected four comma-separated integers, got '" + text +
                                             "'");
  return r;
}

// "8" -> [8,8]; "1-20" -> [1,20].
std::pair<int, int> parse_rounds(const std::string& text) {
  int lo = 0, hi = 0;
  char extra;
  const int got = std::sscanf(text.c_str(), "%d-%d%c", &lo, &hi, &extra);
  if (got == 1) return {lo, lo};
  if (got == 2 && lo <= hi) return {lo, hi};
  throw CLI::ValidationError("--rounds", "expected an integer or a range like 1-20, got '" +
                                             text + "'");
}

QuarterRoundParams make_params(int w, const std::string& rots_text) {
  const std::array<int, 4> r = rots_text.empty() ? default_rots(w) : parse_rots(rots_text);
  QuarterRoundParams p{WordSpec{w}, r[0], r[1], r[2], r[3]};
  p.validate();
  return p;
}

std::string csv_body(const std::string& csv) {  // drop the header row
  return csv.substr(csv.find('\n') + 1);
}

void emit_json(const Json& j) { std::printf("%s\n", j.dump(2).c_str()); }
void emit_csv(const std::string& s) { std::fputs(s.c_str(), stdout); }

// ---------------------------------------------------------------------------
// per-subcommand option bags

struct CommonOpts {
  int w = 4;
  std::string rots;
  int rot = 1;
  std::string format = "text";
  int threads = 0;
  bool force = false;

  SearchOptions search() const {
    SearchOptions o;
    o.threads = threads;
    o.force = force;
    return o;
  }
};

void add_format(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_search_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  cmd->add_flag("--force", o.force, "override the desk-scale size guard");
}

// ---------------------------------------------------------------------------
// subcommand bodies

void run_qr_bounds(const CommonOpts& o, BoundVariant variant) {
  const BoundsPair b = qr_bounds(o.w, o.rot, variant);
  if (o.format == "json") {
    emit_json(qr_bounds_json(o.w, o.rot, variant, b));
  } else if (o.format == "csv") {
    emit_csv(qr_bounds_csv(o.w, o.rot, variant, b));
  } else {
    std::printf("w=%d rot=%d variant=%s\n", o.w, o.rot, variant_name(variant));
    std::printf("lower: %s\n", render_prob(b.lower).c_str());
    std::printf("upper: %s\n", render_prob(b.upper).c_str());
    if (!b.ordered())
      std::printf("note: lower exceeds upper here; the corrected variant is inconsistent at "
                  "rot 1 and w-1 (see README)\n");
  }
}

void run_perm_bounds(const CommonOpts& o, BoundVariant variant, int lo, int hi) {
  std::vector<std::pair<int, BoundsPair>> rows;
  for (int i = lo; i <= hi; ++i) rows.emplace_back(i, multi_round_bounds(o.w, o.rot, i, variant));
  if (o.format == "json") {
    if (rows.size() == 1) {
      emit_json(perm_bounds_json(o.w, o.rot, rows[0].first, variant, rows[0].second));
    } else {
      Json arr = Json::array();
      for (const auto& [i, b] : rows) arr.push_back(perm_bounds_json(o.w, o.rot, i, variant, b));
      emit_json(arr);
    }
  } else if (o.format == "csv") {
    std::string out;
    for (size_t i = 0; i < rows.size(); ++i) {
      const std::string one =
          perm_bounds_csv(o.w, o.rot, rows[i].first, variant, rows[i].second);
      out += i == 0 ? one : csv_body(one);
    }
    emit_csv(out);
  } else {
    std::printf("w=%d rot=%d variant=%s (heuristic: per-round independence)\n", o.w, o.rot,
                variant_name(variant));
    for (const auto& [i, b] : rows)
      std::printf("round %2d: lower %s  upper %s\n", i,
                  log2_pow_string(b.lower.value()).c_str(),
                  log2_pow_string(b.upper.value()).c_str());
  }
}

void print_census_text(const CensusResult& r) {
  std::printf("mode=%s w=%d", r.config.mode.c_str(), r.config.w);
  if (r.config.rots) {
    const auto& a = *r.config.rots;
    std::printf(" rots=%d-%d-%d-%d", a[0], a[1], a[2], a[3]);
  }
  if (r.config.k) std::printf(" k=%d", *r.config.k);
  std::printf(" rot=%d\n", r.config.rot);
  std::printf("collisions: %llu / %llu\n", (unsigned long long)r.count,
              (unsigned long long)r.total);
  std::printf("probability: %s\n", render_prob(r.probability).c_str());
}

void emit_census(const CensusResult& r, const std::string& format) {
  if (format == "json")
    emit_json(census_json(r));
  else if (format == "csv")
    emit_csv(census_csv(r));
  else
    print_census_text(r);
}

void run_verify_add(const CommonOpts& o, int k) {
  const CensusResult census = addition_census(o.w, k, o.rot, o.search());
  const ExactProb formula = multi_add_rot_prob(o.w, k, o.rot);
  const BigRat scaled = formula.value() * BigRat(pow2(k * o.w));
  const bool integral = boost::multiprecision::denominator(scaled) == 1;
  const bool match = integral && scaled == BigRat(BigInt(census.count));

  if (o.format == "json") {
    Json j;
    j["schema"] = "rotkit/verify-add/v1";
    j["w"] = o.w;
    j["k"] = k;
    j["rot"] = o.rot;
    j["census"] = Json{{"count", census.count}, {"total", census.total}};
    j["formula"] = prob_json(formula);
    j["match"] = match;
    emit_json(j);
  } else if (o.format == "csv") {
    std::string s = "w,k,rot,census_count,formula_count,total,match\n";
    s += std::to_string(o.w) + "," + std::to_string(k) + "," + std::to_string(o.rot) + "," +
         std::to_string(census.count) + "," +
         (integral ? BigInt(boost::multiprecision::numerator(scaled)).str()
                   : decimal_string(scaled, 5)) +
         "," + std::to_string(census.total) + "," + (match ? "true" : "false") + "\n";
    emit_csv(s);
  } else {
    std::printf("w=%d k=%d rot=%d\n", o.w, k, o.rot);
    std::printf("census:  %llu / %llu\n", (unsigned long long)census.count,
                (unsigned long long)census.total);
    std::printf("formula: %s\n", render_prob(formula).c_str());
    std::printf("match: %s\n", match ? "yes" : "NO");
  }
  if (!match) std::exit(1);  // a dual-route disagreement is an error, loudly
}

void run_round_sample(const CommonOpts& o, int rounds, std::uint64_t samples,
                      std::uint64_t seed) {
  const QuarterRoundParams p = make_params(o.w, o.rots);
  const SampledEstimate e = sampled_round_census(p, o.rot, rounds, samples, seed, o.search());
  if (o.format == "json") {
    emit_json(round_sample_json(p, o.rot, rounds, e));
  } else if (o.format == "csv") {
    emit_csv(round_sample_csv(p, o.rot, rounds, e));
  } else {
    std::printf("w=%d rots=%d-%d-%d-%d rot=%d rounds=%d seed=%llu\n", o.w, p.r1, p.r2, p.r3,
                p.r4, o.rot, rounds, (unsigned long long)seed);
    std::printf("hits: %llu / %llu\n", (unsigned long long)e.hits,
                (unsigned long long)e.samples);
    std::printf("estimate: %.6g  wilson95 [%.6g, %.6g]\n", e.estimate, e.lower, e.upper);
  }
}

void run_fixed_count(const CommonOpts& o, int k) {
  if (o.format == "json") {
    emit_json(fixed_count_json(o.w, k, o.rot));
  } else if (o.format == "csv") {
    emit_csv(fixed_count_csv(o.w, k, o.rot));
  } else {
    const BigInt c = fixed_string_count(o.w, k, o.rot);
    const int g = (int)std::gcd(o.w, o.rot);
    std::printf("w=%d k=%d rot=%d gcd=%d\n", o.w, k, o.rot, g);
    std::printf("rotation-fixed strings: %s = 2^%d\n", c.str().c_str(), k * g);
  }
}

void run_expected_collisions(const CommonOpts& o, int k, std::uint64_t trials,
                             std::uint64_t seed) {
  if (o.format == "json") {
    Json j = expected_collisions_json(o.w, k, o.rot);
    if (trials)
      j["mc"] = perm_mc_json(o.w, k, o.rot,
                             random_perm_collision_mc(o.w, k, o.rot, trials, seed, o.search()));
    emit_json(j);
  } else if (o.format == "csv") {
    if (trials)
      emit_csv(perm_mc_csv(o.w, k, o.rot,
                           random_perm_collision_mc(o.w, k, o.rot, trials, seed, o.search())));
    else
      emit_csv(expected_collisions_csv(o.w, k, o.rot));
  } else {
    std::printf("w=%d k=%d rot=%d\n", o.w, k, o.rot);
    std::printf("expected collisions: %s\n",
                render_expectation(expected_collisions(o.w, k, o.rot)).c_str());
    if (trials) {
      const PermCollisionEstimate e =
          random_perm_collision_mc(o.w, k, o.rot, trials, seed, o.search());
      std::printf("mc over %llu trials: mean %.6g +/- %.3g, normal95 [%.6g, %.6g] (seed %llu)\n",
                  (unsigned long long)e.trials, e.mean, e.std_error, e.lower, e.upper,
                  (unsigned long long)e.seed);
    }
  }
}

void run_distinguish(const CommonOpts& o, std::uint64_t budget, std::uint64_t budget_factor,
                     std::uint64_t trials, std::uint64_t seed) {
  TrialConfig cfg;
  cfg.arx.kind = OracleKind::quarter_round_perm;
  cfg.arx.params = make_params(o.w, o.rots);
  cfg.rot = o.rot;
  cfg.budget =
      budget ? budget : default_budget(qr_bounds(o.w, o.rot, BoundVariant::chain).upper,
                                       budget_factor);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.threads = o.threads;
  const TrialStats st = run_trials(cfg);

  if (o.format == "json") {
    // JSON lines: one compact document per trial, then the summary.
    for (const TrialOutcome& out : st.outcomes)
      std::printf("%s\n", trial_outcome_json(out).dump().c_str());
    std::printf("%s\n", distinguish_summary_json(cfg, st).dump().c_str());
  } else if (o.format == "csv") {
    emit_csv(distinguish_summary_csv(cfg, st));
  } else {
    std::printf("oracle=quarter-round-perm w=%d rots=%d-%d-%d-%d rot=%d\n", o.w,
                cfg.arx.params.r1, cfg.arx.params.r2, cfg.arx.params.r3, cfg.arx.params.r4,
                o.rot);
    std::printf("trials=%llu budget=%llu seed=%llu\n", (unsigned long long)st.trials,
                (unsigned long long)st.budget, (unsigned long long)st.seed);
    std::printf("TPR %.4f [%.4f, %.4f]\n", st.tpr, st.tpr_ci.lo, st.tpr_ci.hi);
    std::printf("FPR %.4f [%.4f, %.4f]\n", st.fpr, st.fpr_ci.lo, st.fpr_ci.hi);
    std::printf("advantage %.4f\n", st.advantage);
  }
}

void run_table1(const CommonOpts& o, bool fast) {
  const std::vector<Table1Row> rows = compute_table1(o.search(), fast);
  if (o.format == "json") {
    emit_json(table1_json(rows));
  } else if (o.format == "csv") {
    emit_csv(table1_csv(rows));
  } else {
    std::printf(" w  rots     rot  collisions    lower  measured    upper          p\n");
    for (const auto& r : rows)
      std::printf("%2d  %d-%d-%d-%d  %3d  %10llu  %s   %s   %s   %s\n", r.params.w(),
                  r.params.r1, r.params.r2, r.params.r3, r.params.r4, r.r,
                  (unsigned long long)r.count,
                  decimal_string(r.bounds.lower.value(), 5).c_str(),
                  decimal_string(r.measured, 5).c_str(),
                  decimal_string(r.bounds.upper.value(), 5).c_str(),
                  ("2^-" + detail::fmt_2dp(4.0 * r.params.w())).c_str());
  }
}

void run_table2(const CommonOpts& o, BoundVariant variant, int lo, int hi) {
  const std::vector<Table2Row> all = compute_table2(o.rot, hi, variant, o.w);
  const std::vector<Table2Row> rows(all.begin() + (lo - 1), all.end());
  if (o.format == "json") {
    emit_json(table2_json(rows, o.w, o.rot, variant));
  } else if (o.format == "csv") {
    emit_csv(table2_csv(rows));
  } else {
    std::printf("w=%d rot=%d variant=%s (heuristic: per-round independence)\n", o.w, o.rot,
                variant_name(variant));
    std::printf("round  lower        upper\n");
    for (const auto& r : rows)
      std::printf("%5d  %-11s  %s\n", r.rounds,
                  log2_pow_string(r.bounds.lower.value()).c_str(),
                  log2_pow_string(r.bounds.upper.value()).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rotational-collision analysis of ARX quarter rounds"};
  app.require_subcommand(1);

  // Each subcommand gets its own option bag; CLI11 writes into these and
  // the callback fires after parsing.
  try {
    // qr-bounds ---------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto variant = std::make_shared<std::string>("chain");
      CLI::App* cmd = app.add_subcommand("qr-bounds", "exact quarter-round collision bounds");
      o->w = 32;
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      cmd->add_option("--variant", *variant, "bound variant")
          ->check(CLI::IsMember({"chain", "corrected"}))
          ->capture_default_str();
      add_format(cmd, *o);
      cmd->callback([o, variant] {
        run_qr_bounds(*o, *variant == "chain" ? BoundVariant::chain : BoundVariant::corrected);
      });
    }

    // perm-bounds -------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto variant = std::make_shared<std::string>("corrected");
      auto rounds = std::make_shared<std::string>("1");
      CLI::App* cmd =
          app.add_subcommand("perm-bounds", "heuristic multi-round collision bounds");
      o->w = 32;
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      cmd->add_option("--rounds", *rounds, "round count or range A-B")->capture_default_str();
      cmd->add_option("--variant", *variant, "bound variant")
          ->check(CLI::IsMember({"chain", "corrected"}))
          ->capture_default_str();
      add_format(cmd, *o);
      cmd->callback([o, variant, rounds] {
        const auto [lo, hi] = parse_rounds(*rounds);
        run_perm_bounds(*o, *variant == "chain" ? BoundVariant::chain : BoundVariant::corrected,
                        lo, hi);
      });
    }

    // qr-census / cond-census --------------------------------------------
    for (const bool condition : {false, true}) {
      auto o = std::make_shared<CommonOpts>();
      CLI::App* cmd = app.add_subcommand(
          condition ? "cond-census" : "qr-census",
          condition ? "exhaustive census of the per-word commutation conditions"
                    : "exhaustive quarter-round collision census");
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rots", o->rots, "quarter-round rotations r1,r2,r3,r4");
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      add_search_flags(cmd, *o);
      add_format(cmd, *o);
      cmd->callback([o, condition] {
        const QuarterRoundParams p = make_params(o->w, o->rots);
        emit_census(condition ? condition_census(p, o->rot, o->search())
                              : qr_census(p, o->rot, o->search()),
                    o->format);
      });
    }

    // verify-add ----------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto k = std::make_shared<int>(2);
      CLI::App* cmd = app.add_subcommand(
          "verify-add", "k-addend rotational addition: census vs closed formula");
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--k", *k, "number of addends")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      add_search_flags(cmd, *o);
      add_format(cmd, *o);
      cmd->callback([o, k] { run_verify_add(*o, *k); });
    }

    // chain-census --------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      CLI::App* cmd =
          app.add_subcommand("chain-census", "joint two- and three-addend commutation census");
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      add_search_flags(cmd, *o);
      add_format(cmd, *o);
      cmd->callback([o] { emit_census(chain_census(o->w, o->rot, o->search()), o->format); });
    }

    // round-sample ----------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto rounds = std::make_shared<int>(1);
      auto samples = std::make_shared<std::uint64_t>(1000000);
      auto seed = std::make_shared<std::uint64_t>(0);
      CLI::App* cmd = app.add_subcommand(
          "round-sample", "sampled collision rate through full alternating rounds");
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rots", o->rots, "quarter-round rotations r1,r2,r3,r4");
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      cmd->add_option("--rounds", *rounds, "number of alternating rounds")
          ->capture_default_str();
      cmd->add_option("--samples", *samples, "random states to draw")->capture_default_str();
      cmd->add_option("--seed", *seed, "PRNG seed")->capture_default_str();
      add_search_flags(cmd, *o);
      add_format(cmd, *o);
      cmd->callback([o, rounds, samples, seed] {
        run_round_sample(*o, *rounds, *samples, *seed);
      });
    }

    // fixed-count -------------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto k = std::make_shared<int>(4);
      CLI::App* cmd =
          app.add_subcommand("fixed-count", "count of rotation-fixed k-word strings");
      o->w = 32;
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--k", *k, "words per string")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      add_format(cmd, *o);
      cmd->callback([o, k] { run_fixed_count(*o, *k); });
    }

    // expected-collisions -------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto k = std::make_shared<int>(1);
      auto trials = std::make_shared<std::uint64_t>(0);
      auto seed = std::make_shared<std::uint64_t>(0);
      CLI::App* cmd = app.add_subcommand(
          "expected-collisions",
          "exact E[collisions] of a random permutation, optional Monte-Carlo check");
      o->w = 2;
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--k", *k, "words per state")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      cmd->add_option("--trials", *trials, "Monte-Carlo trials (0 = closed form only)")
          ->capture_default_str();
      cmd->add_option("--seed", *seed, "PRNG seed")->capture_default_str();
      add_search_flags(cmd, *o);
      add_format(cmd, *o);
      cmd->callback([o, k, trials, seed] {
        run_expected_collisions(*o, *k, *trials, *seed);
      });
    }

    // distinguish ------------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto budget = std::make_shared<std::uint64_t>(0);
      auto factor = std::make_shared<std::uint64_t>(kDefaultBudgetFactor);
      auto trials = std::make_shared<std::uint64_t>(100);
      auto seed = std::make_shared<std::uint64_t>(0);
      CLI::App* cmd = app.add_subcommand(
          "distinguish", "play the collision-distinguishing game against both oracles");
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rots", o->rots, "quarter-round rotations r1,r2,r3,r4");
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      cmd->add_option("--budget", *budget, "query pairs per game (0 = ceil(c/upper))")
          ->capture_default_str();
      cmd->add_option("--budget-factor", *factor, "c in the default budget ceil(c/upper)")
          ->capture_default_str();
      cmd->add_option("--trials", *trials, "games per oracle kind")->capture_default_str();
      cmd->add_option("--seed", *seed, "master PRNG seed")->capture_default_str();
      cmd->add_option("--threads", o->threads, "worker threads (0 = all cores)")
          ->capture_default_str();
      add_format(cmd, *o);
      cmd->callback([o, budget, factor, trials, seed] {
        run_distinguish(*o, *budget, *factor, *trials, *seed);
      });
    }

    // table1 / table2 -----------------------------------------------------------
    {
      auto o = std::make_shared<CommonOpts>();
      auto fast = std::make_shared<bool>(false);
      CLI::App* cmd = app.add_subcommand(
          "table1", "measured toy censuses against the chain bounds (seven rows)");
      cmd->add_flag("--fast", *fast, "print the stored counts instead of re-sweeping");
      cmd->add_option("--threads", o->threads, "worker threads (0 = all cores)")
          ->capture_default_str();
      add_format(cmd, *o);
      cmd->callback([o, fast] { run_table1(*o, *fast); });
    }
    {
      auto o = std::make_shared<CommonOpts>();
      auto variant = std::make_shared<std::string>("corrected");
      auto rounds = std::make_shared<std::string>("20");
      CLI::App* cmd =
          app.add_subcommand("table2", "multi-round bound propagation at full width");
      o->w = 32;
      cmd->add_option("--word-bits", o->w, "word size in bits")->capture_default_str();
      cmd->add_option("--rot", o->rot, "rotation distance r")->capture_default_str();
      cmd->add_option("--rounds", *rounds, "last round, or range A-B")->capture_default_str();
      cmd->add_option("--variant", *variant, "bound variant")
          ->check(CLI::IsMember({"chain", "corrected"}))
          ->capture_default_str();
      add_format(cmd, *o);
      cmd->callback([o, variant, rounds] {
        // A bare integer means "the table up to round N"; a range A-B slices.
        auto [lo, hi] = parse_rounds(*rounds);
        if (rounds->find('-') == std::string::npos) lo = 1;
        if (lo < 1) throw CLI::ValidationError("--rounds", "rounds start at 1");
        run_table2(*o, *variant == "chain" ? BoundVariant::chain : BoundVariant::corrected, lo,
                   hi);
      });
    }

    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;  // usage problems are exit 1; --help stays 0
  } catch (const InfeasibleSizeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
