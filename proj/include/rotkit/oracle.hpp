#pragma once
// Permutation oracles for the distinguishing game.
//
// Three kinds share one query interface (k words of w bits in, k words
// out): the quarter round as a permutation of (F_2^w)^4, the full 16-word
// state permutation over rho rounds, and a lazily sampled uniform random
// permutation.  The random kind exists only at toy scale — outputs are
// drawn without replacement through a forward map plus a reverse map for
// rejection, so memory grows with queries, not with the space — and can be
// pinned to map 0 -> 0, mirroring the ARX permutations' zero fixed point.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rotkit/errors.hpp"
#include "rotkit/prng.hpp"
#include "rotkit/quarter_round.hpp"
#include "rotkit/state.hpp"

namespace rotkit {

enum class OracleKind { quarter_round_perm, chacha_perm, random_perm };

inline const char* oracle_kind_name(OracleKind k) {
  switch (k) {
    case OracleKind::quarter_round_perm: return "quarter-round-perm";
    case OracleKind::chacha_perm: return "chacha-perm";
    case OracleKind::random_perm: return "random-perm";
  }
  return "?";
}

struct OracleSpec {
  OracleKind kind = OracleKind::quarter_round_perm;
  QuarterRoundParams params{};  // ARX kinds
  int rounds = 1;               // chacha-perm only
  int word_count = 4;           // random-perm only; ARX kinds fix it (4 or 16)
  bool pin_zero = false;        // random-perm only
  std::uint64_t seed = 0;       // random-perm only
};

class PermutationOracle {
 public:
  virtual ~PermutationOracle() = default;

  int word_bits() const { return w_; }
  int word_count() const { return k_; }
  std::uint64_t queries() const { return queries_; }

  void query(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) {
    if ((int)in.size() != k_ || (int)out.size() != k_)
      throw std::domain_error("oracle query: expected " + std::to_string(k_) + " words");
    ++queries_;
    eval(in, out);
  }

 protected:
  PermutationOracle(int w, int k) : w_(w), k_(k) {}
  virtual void eval(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) = 0;

 private:
  int w_, k_;
  std::uint64_t queries_ = 0;
};

namespace detail {

class QuarterRoundPermOracle final : public PermutationOracle {
 public:
  explicit QuarterRoundPermOracle(const QuarterRoundParams& p)
      : PermutationOracle(p.w(), 4), kernel_(p) {}

 private:
  void eval(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) override {
    const WordVec4 y = kernel_.qr(WordVec4{in[0], in[1], in[2], in[3]});
    for (int i = 0; i < 4; ++i) out[i] = y[i];
  }
  QrKernel kernel_;
};

class ChaChaPermOracle final : public PermutationOracle {
 public:
  ChaChaPermOracle(const QuarterRoundParams& p, int rounds)
      : PermutationOracle(p.w(), 16), kernel_(p), rounds_(rounds) {
    if (rounds < 0) throw std::domain_error("chacha-perm oracle: rounds must be >= 0");
  }

 private:
  void eval(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) override {
    State s;
    for (int i = 0; i < 16; ++i) s.v[i] = in[i];
    for (int i = 0; i < rounds_; ++i)
      s = round_with(kernel_, s, (i & 1) == 0 ? RoundKind::column : RoundKind::diagonal);
    for (int i = 0; i < 16; ++i) out[i] = s.v[i];
  }
  QrKernel kernel_;
  int rounds_;
};

class LazyRandomPermOracle final : public PermutationOracle {
 public:
  LazyRandomPermOracle(int w, int k, std::uint64_t seed, bool pin_zero)
      : PermutationOracle(w, k), gen_(seed) {
    WordSpec{w}.validate();
    if (k < 1) throw std::domain_error("random-perm oracle: word count must be >= 1");
    space_bits_ = w * k;
    if (space_bits_ > 32)
      throw InfeasibleSizeError("random-perm oracle: space 2^" + std::to_string(space_bits_) +
                                " exceeds the w*k <= 32 lazy-table guard");
    size_ = std::uint64_t{1} << space_bits_;
    if (pin_zero) {
      forward_.emplace(0, 0);
      backward_.emplace(0, 0);
    }
  }

 private:
  void eval(std::span<const std::uint32_t> in, std::span<std::uint32_t> out) override {
    const int w = word_bits();
    std::uint64_t key = 0;
    for (int j = 0; j < word_count(); ++j) key |= (std::uint64_t)in[j] << (j * w);

    auto it = forward_.find(key);
    if (it == forward_.end()) {
      // Uniform over the still-unassigned outputs, by rejection.  Cheap
      // until the table is nearly full, which only tiny spaces ever reach.
      std::uint64_t y;
      do {
        y = gen_.below(size_);
      } while (backward_.count(y));
      it = forward_.emplace(key, y).first;
      backward_.emplace(y, key);
    }
    const std::uint64_t val = it->second;
    const std::uint32_t m = WordSpec{w}.mask();
    for (int j = 0; j < word_count(); ++j) out[j] = (std::uint32_t)(val >> (j * w)) & m;
  }

  SplitMix64 gen_;
  int space_bits_;
  std::uint64_t size_;
  std::unordered_map<std::uint64_t, std::uint64_t> forward_, backward_;
};

}  // namespace detail

inline std::unique_ptr<PermutationOracle> make_oracle(const OracleSpec& spec) {
  switch (spec.kind) {
    case OracleKind::quarter_round_perm:
      spec.params.validate();
      return std::make_unique<detail::QuarterRoundPermOracle>(spec.params);
    case OracleKind::chacha_perm:
      spec.params.validate();
      return std::make_unique<detail::ChaChaPermOracle>(spec.params, spec.rounds);
    case OracleKind::random_perm:
      return std::make_unique<detail::LazyRandomPermOracle>(spec.params.w(), spec.word_count,
                                                            spec.seed, spec.pin_zero);
  }
  throw std::domain_error("make_oracle: unknown oracle kind");
}

}  // namespace rotkit
