#pragma once
// JSON and CSV forms for every reportable result.
//
// JSON: each document carries a versioned "schema" field.  Probabilities
// serialize as {num, den, decimal, log2}: numerator and denominator as
// decimal strings (they outgrow 64 bits immediately at w=32), decimal is
// the exact 5-place rendering, log2 is rounded to 2 places (null for an
// exact zero).  nlohmann::json keeps keys sorted, so parse -> dump is a
// bytewise round trip of anything we emitted.
//
// CSV: one writer per subcommand, header row included, column order pinned
// here.  Decimals use the same 5-place exact rendering as text output;
// log2 columns are 2-place; free doubles (sampling estimates, rates) use
// "%.10g" so re-running a seed reproduces files bytewise.

#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "rotkit/bounds.hpp"
#include "rotkit/census.hpp"
#include "rotkit/distinguisher.hpp"
#include "rotkit/format.hpp"
#include "rotkit/tables.hpp"

namespace rotkit {

using Json = nlohmann::json;

namespace detail {

inline std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string fmt_2dp(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", round_2dp(x));
  return buf;
}

// Rotation constants joined "1-3-2-1", for CSV cells and config echoes.
inline std::string rots_label(const std::array<int, 4>& r) {
  return std::to_string(r[0]) + "-" + std::to_string(r[1]) + "-" + std::to_string(r[2]) + "-" +
         std::to_string(r[3]);
}

inline std::string rots_label(const QuarterRoundParams& p) {
  return rots_label(std::array<int, 4>{p.r1, p.r2, p.r3, p.r4});
}

// The random-permutation reference level 2^{-bits}, printed like the
// bound exponents ("2^-16.00").
inline std::string pow2_label(int bits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "2^-%.2f", (double)bits);
  return buf;
}

}  // namespace detail

inline Json prob_json(const BigRat& v) {
  Json j;
  j["num"] = boost::multiprecision::numerator(v).str();
  j["den"] = boost::multiprecision::denominator(v).str();
  j["decimal"] = decimal_string(v, 5);
  if (v > 0)
    j["log2"] = round_2dp(log2_value(v));
  else
    j["log2"] = nullptr;
  return j;
}

inline Json prob_json(const ExactProb& p) { return prob_json(p.value()); }

// --- bounds ---------------------------------------------------------------

inline Json qr_bounds_json(int w, int rot, BoundVariant variant, const BoundsPair& b) {
  Json j;
  j["schema"] = "rotkit/qr-bounds/v1";
  j["w"] = w;
  j["rot"] = rot;
  j["variant"] = variant_name(variant);
  j["lower"] = prob_json(b.lower);
  j["upper"] = prob_json(b.upper);
  j["ordered"] = b.ordered();
  return j;
}

inline Json perm_bounds_json(int w, int rot, int rounds, BoundVariant variant,
                             const BoundsPair& b) {
  Json j;
  j["schema"] = "rotkit/perm-bounds/v1";
  j["w"] = w;
  j["rot"] = rot;
  j["rounds"] = rounds;
  j["variant"] = variant_name(variant);
  j["heuristic"] = true;  // per-round independence assumption
  j["lower"] = prob_json(b.lower);
  j["upper"] = prob_json(b.upper);
  j["ordered"] = b.ordered();
  return j;
}

inline std::string qr_bounds_csv(int w, int rot, BoundVariant variant, const BoundsPair& b) {
  std::string s = "w,rot,variant,lower,upper,lower_log2,upper_log2\n";
  s += std::to_string(w) + "," + std::to_string(rot) + "," + variant_name(variant) + "," +
       decimal_string(b.lower.value(), 5) + "," + decimal_string(b.upper.value(), 5) + "," +
       detail::fmt_2dp(log2_value(b.lower.value())) + "," +
       detail::fmt_2dp(log2_value(b.upper.value())) + "\n";
  return s;
}

inline std::string perm_bounds_csv(int w, int rot, int rounds, BoundVariant variant,
                                   const BoundsPair& b) {
  std::string s = "w,rot,rounds,variant,lower_log2,upper_log2\n";
  s += std::to_string(w) + "," + std::to_string(rot) + "," + std::to_string(rounds) + "," +
       variant_name(variant) + "," + detail::fmt_2dp(log2_value(b.lower.value())) + "," +
       detail::fmt_2dp(log2_value(b.upper.value())) + "\n";
  return s;
}

// --- censuses ---------------------------------------------------------------

inline Json census_json(const CensusResult& r) {
  Json cfg;
  cfg["mode"] = r.config.mode;
  cfg["w"] = r.config.w;
  if (r.config.rots) {
    const auto& a = *r.config.rots;
    cfg["rots"] = Json::array({a[0], a[1], a[2], a[3]});
  }
  if (r.config.k) cfg["k"] = *r.config.k;
  cfg["rot"] = r.config.rot;

  Json j;
  j["schema"] = "rotkit/census/v1";
  j["config"] = cfg;
  j["count"] = r.count;
  j["total"] = r.total;
  j["probability"] = prob_json(r.probability.value());
  return j;
}

inline std::string census_csv(const CensusResult& r) {
  std::string s = "mode,w,rots,k,rot,collisions,total,probability,log2\n";
  s += r.config.mode + "," + std::to_string(r.config.w) + ",";
  s += r.config.rots ? detail::rots_label(*r.config.rots) : std::string();
  s += ",";
  s += r.config.k ? std::to_string(*r.config.k) : std::string();
  s += "," + std::to_string(r.config.rot) + "," + std::to_string(r.count) + "," +
       std::to_string(r.total) + "," + decimal_string(r.probability.value(), 5) + "," +
       detail::fmt_2dp(log2_value(r.probability.value())) + "\n";
  return s;
}

inline Json round_sample_json(const QuarterRoundParams& p, int rot, int rounds,
                              const SampledEstimate& e) {
  Json j;
  j["schema"] = "rotkit/round-sample/v1";
  j["config"] = Json{{"w", p.w()},
                     {"rots", Json::array({p.r1, p.r2, p.r3, p.r4})},
                     {"rot", rot},
                     {"rounds", rounds}};
  j["hits"] = e.hits;
  j["samples"] = e.samples;
  j["estimate"] = e.estimate;
  j["wilson95"] = Json{{"lo", e.lower}, {"hi", e.upper}};
  j["seed"] = e.seed;
  return j;
}

inline std::string round_sample_csv(const QuarterRoundParams& p, int rot, int rounds,
                                    const SampledEstimate& e) {
  std::string s = "w,rots,rot,rounds,hits,samples,estimate,wilson_lo,wilson_hi,seed\n";
  s += std::to_string(p.w()) + "," + detail::rots_label(p) + "," + std::to_string(rot) + "," +
       std::to_string(rounds) + "," + std::to_string(e.hits) + "," + std::to_string(e.samples) +
       "," + detail::fmt_double(e.estimate) + "," + detail::fmt_double(e.lower) + "," +
       detail::fmt_double(e.upper) + "," + std::to_string(e.seed) + "\n";
  return s;
}

inline Json perm_mc_json(int w, int k, int rot, const PermCollisionEstimate& e) {
  Json j;
  j["schema"] = "rotkit/perm-mc/v1";
  j["config"] = Json{{"w", w}, {"k", k}, {"rot", rot}, {"space_bits", e.space_bits}};
  j["trials"] = e.trials;
  j["total_collisions"] = e.total_collisions;
  j["mean"] = e.mean;
  j["std_error"] = e.std_error;
  j["normal95"] = Json{{"lo", e.lower}, {"hi", e.upper}};
  j["seed"] = e.seed;
  return j;
}

inline std::string perm_mc_csv(int w, int k, int rot, const PermCollisionEstimate& e) {
  std::string s = "w,k,rot,trials,total_collisions,mean,std_error,lo,hi,seed\n";
  s += std::to_string(w) + "," + std::to_string(k) + "," + std::to_string(rot) + "," +
       std::to_string(e.trials) + "," + std::to_string(e.total_collisions) + "," +
       detail::fmt_double(e.mean) + "," + detail::fmt_double(e.std_error) + "," +
       detail::fmt_double(e.lower) + "," + detail::fmt_double(e.upper) + "," +
       std::to_string(e.seed) + "\n";
  return s;
}

// --- fixed strings and expectations -----------------------------------------

inline Json fixed_count_json(int w, int k, int rot) {
  const BigInt c = fixed_string_count(w, k, rot);
  const int g = (int)std::gcd(w, rot);
  Json j;
  j["schema"] = "rotkit/fixed-count/v1";
  j["w"] = w;
  j["k"] = k;
  j["rot"] = rot;
  j["gcd"] = g;
  j["count"] = c.str();
  j["log2"] = (double)(k * g);  // count is exactly 2^(k*gcd)
  return j;
}

inline std::string fixed_count_csv(int w, int k, int rot) {
  const BigInt c = fixed_string_count(w, k, rot);
  const int g = (int)std::gcd(w, rot);
  std::string s = "w,k,rot,gcd,count,log2\n";
  s += std::to_string(w) + "," + std::to_string(k) + "," + std::to_string(rot) + "," +
       std::to_string(g) + "," + c.str() + "," + detail::fmt_2dp((double)(k * g)) + "\n";
  return s;
}

inline Json expected_collisions_json(int w, int k, int rot) {
  const BigRat e = expected_collisions(w, k, rot);
  Json j;
  j["schema"] = "rotkit/expected-collisions/v1";
  j["w"] = w;
  j["k"] = k;
  j["rot"] = rot;
  j["expectation"] = Json{{"num", boost::multiprecision::numerator(e).str()},
                          {"den", boost::multiprecision::denominator(e).str()},
                          {"decimal", decimal_string(e, 5)}};
  return j;
}

inline std::string expected_collisions_csv(int w, int k, int rot) {
  const BigRat e = expected_collisions(w, k, rot);
  std::string s = "w,k,rot,num,den,decimal\n";
  s += std::to_string(w) + "," + std::to_string(k) + "," + std::to_string(rot) + "," +
       boost::multiprecision::numerator(e).str() + "," +
       boost::multiprecision::denominator(e).str() + "," + decimal_string(e, 5) + "\n";
  return s;
}

// --- distinguisher ----------------------------------------------------------

inline Json trial_outcome_json(const TrialOutcome& o) {
  Json j;
  j["trial"] = o.trial;
  j["oracle_kind"] = oracle_kind_name(o.kind);
  j["seed"] = o.seed;
  j["N"] = o.budget;
  j["collisions"] = o.collisions;
  j["decision"] = o.decision == Decision::chacha ? "chacha" : "random";
  return j;
}

inline Json distinguish_summary_json(const TrialConfig& cfg, const TrialStats& s) {
  Json j;
  j["schema"] = "rotkit/distinguish/v1";
  j["oracle"] = oracle_kind_name(cfg.arx.kind);
  j["w"] = cfg.arx.params.w();
  j["rots"] = Json::array({cfg.arx.params.r1, cfg.arx.params.r2, cfg.arx.params.r3,
                           cfg.arx.params.r4});
  if (cfg.arx.kind == OracleKind::chacha_perm) j["rounds"] = cfg.arx.rounds;
  j["rot"] = cfg.rot;
  j["trials"] = s.trials;
  j["budget"] = s.budget;
  j["true_positives"] = s.true_positives;
  j["false_positives"] = s.false_positives;
  j["tpr"] = s.tpr;
  j["fpr"] = s.fpr;
  j["advantage"] = s.advantage;
  j["tpr_ci95"] = Json{{"lo", s.tpr_ci.lo}, {"hi", s.tpr_ci.hi}};
  j["fpr_ci95"] = Json{{"lo", s.fpr_ci.lo}, {"hi", s.fpr_ci.hi}};
  j["seed"] = s.seed;
  return j;
}

inline std::string distinguish_summary_csv(const TrialConfig& cfg, const TrialStats& s) {
  std::string out = "oracle,w,rot,trials,budget,tp,fp,tpr,fpr,advantage,tpr_lo,tpr_hi,fpr_lo,fpr_hi,seed\n";
  out += std::string(oracle_kind_name(cfg.arx.kind)) + "," + std::to_string(cfg.arx.params.w()) +
         "," + std::to_string(cfg.rot) + "," + std::to_string(s.trials) + "," +
         std::to_string(s.budget) + "," + std::to_string(s.true_positives) + "," +
         std::to_string(s.false_positives) + "," + detail::fmt_double(s.tpr) + "," +
         detail::fmt_double(s.fpr) + "," + detail::fmt_double(s.advantage) + "," +
         detail::fmt_double(s.tpr_ci.lo) + "," + detail::fmt_double(s.tpr_ci.hi) + "," +
         detail::fmt_double(s.fpr_ci.lo) + "," + detail::fmt_double(s.fpr_ci.hi) + "," +
         std::to_string(s.seed) + "\n";
  return out;
}

// --- tables -----------------------------------------------------------------

inline Json table1_json(const std::vector<Table1Row>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["w"] = r.params.w();
    row["rots"] = Json::array({r.params.r1, r.params.r2, r.params.r3, r.params.r4});
    row["rot"] = r.r;
    row["collisions"] = r.count;
    row["total"] = r.total;
    row["lower"] = prob_json(r.bounds.lower);
    row["measured"] = prob_json(r.measured);
    row["upper"] = prob_json(r.bounds.upper);
    row["p"] = detail::pow2_label(4 * r.params.w());
    row["from_cache"] = r.from_cache;
    arr.push_back(std::move(row));
  }
  Json j;
  j["schema"] = "rotkit/table1/v1";
  j["variant"] = variant_name(BoundVariant::chain);
  j["rows"] = std::move(arr);
  return j;
}

// The committed golden: one header plus seven rows, bound and measured
// columns as 5-place decimals, p as the 2^{-4w} label.
inline std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::string s = "w,rots,r,collisions,lower,measured,upper,p\n";
  for (const auto& r : rows) {
    s += std::to_string(r.params.w()) + "," + detail::rots_label(r.params) + "," +
         std::to_string(r.r) + "," + std::to_string(r.count) + "," +
         decimal_string(r.bounds.lower.value(), 5) + "," + decimal_string(r.measured, 5) + "," +
         decimal_string(r.bounds.upper.value(), 5) + "," +
         detail::pow2_label(4 * r.params.w()) + "\n";
  }
  return s;
}

inline Json table2_json(const std::vector<Table2Row>& rows, int w, int rot,
                        BoundVariant variant) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["rounds"] = r.rounds;
    row["lower"] = prob_json(r.bounds.lower);
    row["upper"] = prob_json(r.bounds.upper);
    row["ordered"] = r.bounds.ordered();
    arr.push_back(std::move(row));
  }
  Json j;
  j["schema"] = "rotkit/table2/v1";
  j["w"] = w;
  j["rot"] = rot;
  j["variant"] = variant_name(variant);
  j["heuristic"] = true;
  j["rows"] = std::move(arr);
  return j;
}

inline std::string table2_csv(const std::vector<Table2Row>& rows) {
  std::string s = "round,lower_log2,upper_log2\n";
  for (const auto& r : rows)
    s += std::to_string(r.rounds) + "," + detail::fmt_2dp(log2_value(r.bounds.lower.value())) +
         "," + detail::fmt_2dp(log2_value(r.bounds.upper.value())) + "\n";
  return s;
}

}  // namespace rotkit
