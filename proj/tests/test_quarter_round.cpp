#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "reference_oracles.hpp"
#include "rotkit/prng.hpp"
#include "rotkit/quarter_round.hpp"

using namespace rotkit;

namespace {
const QuarterRoundParams kFull{};                          // w=32, (16,12,8,7)
const QuarterRoundParams kToy4{WordSpec{4}, 1, 3, 2, 1};   // toy table config
}  // namespace

TEST_CASE("quarter round matches the RFC 8439 worked example", "[qr]") {
  const WordVec4 x{0x11111111u, 0x01020304u, 0x9b8d6f43u, 0x01234567u};
  const WordVec4 y = quarter_round(kFull, x);
  CHECK(y[0] == 0xea2a92f4u);
  CHECK(y[1] == 0xcb1cf8ceu);
  CHECK(y[2] == 0x4581472eu);
  CHECK(y[3] == 0x5881c4bbu);
}

TEST_CASE("toy quarter round worked example with trace", "[qr]") {
  // w=4, rotations (1,3,2,1), input (1,0,0,0):
  //   b0 = 1+0 = 1;  b3 = (1^0)<<<1 = 2;  b2 = 2+0 = 2;  b1 = (2^0)<<<3 = 1
  //   y0 = 1+1 = 2;  y3 = (2^2)<<<2 = 0;  y2 = 0+2 = 2;  y1 = (2^1)<<<1 = 6
  const QrTrace t = quarter_round_trace(kToy4, {1, 0, 0, 0});
  CHECK(t.b0 == 1);
  CHECK(t.b3 == 2);
  CHECK(t.b2 == 2);
  CHECK(t.b1 == 1);
  CHECK(t.y == WordVec4{2, 6, 2, 0});
}

TEST_CASE("quarter round agrees with the straight-line reference", "[qr]") {
  SECTION("exhaustively at w=3") {
    const QuarterRoundParams p{WordSpec{3}, 1, 2, 1, 2};
    for (std::uint32_t i = 0; i < (1u << 12); ++i) {
      const WordVec4 x{i & 7, (i >> 3) & 7, (i >> 6) & 7, (i >> 9) & 7};
      const ref::QrOut o = ref::quarter_round(x[0], x[1], x[2], x[3], 1, 2, 1, 2, 3);
      const WordVec4 y = quarter_round(p, x);
      REQUIRE(y == WordVec4{(std::uint32_t)o.y0, (std::uint32_t)o.y1, (std::uint32_t)o.y2,
                            (std::uint32_t)o.y3});
    }
  }
  SECTION("randomized at w=32") {
    SplitMix64 g(2024);
    for (int i = 0; i < 10000; ++i) {
      const WordVec4 x{(std::uint32_t)g.bits(32), (std::uint32_t)g.bits(32),
                       (std::uint32_t)g.bits(32), (std::uint32_t)g.bits(32)};
      const ref::QrOut o = ref::quarter_round(x[0], x[1], x[2], x[3], 16, 12, 8, 7, 32);
      const WordVec4 y = quarter_round(kFull, x);
      REQUIRE(y == WordVec4{(std::uint32_t)o.y0, (std::uint32_t)o.y1, (std::uint32_t)o.y2,
                            (std::uint32_t)o.y3});
    }
  }
}

TEST_CASE("quarter round is a bijection on the toy space", "[qr]") {
  std::vector<bool> seen(1u << 16, false);
  for (std::uint32_t i = 0; i < (1u << 16); ++i) {
    const WordVec4 x{i & 15, (i >> 4) & 15, (i >> 8) & 15, (i >> 12) & 15};
    const WordVec4 y = quarter_round(kToy4, x);
    const std::uint32_t packed = y[0] | (y[1] << 4) | (y[2] << 8) | (y[3] << 12);
    REQUIRE(!seen[packed]);
    seen[packed] = true;
  }
}

TEST_CASE("inverse quarter round", "[qr]") {
  SECTION("round-trips exhaustively at w=3") {
    const QuarterRoundParams p{WordSpec{3}, 1, 2, 1, 2};
    for (std::uint32_t i = 0; i < (1u << 12); ++i) {
      const WordVec4 x{i & 7, (i >> 3) & 7, (i >> 6) & 7, (i >> 9) & 7};
      REQUIRE(inverse_quarter_round(p, quarter_round(p, x)) == x);
    }
  }
  SECTION("round-trips on 10^5 random full-width inputs") {
    SplitMix64 g(7);
    for (int i = 0; i < 100000; ++i) {
      const WordVec4 x{(std::uint32_t)g.bits(32), (std::uint32_t)g.bits(32),
                       (std::uint32_t)g.bits(32), (std::uint32_t)g.bits(32)};
      REQUIRE(inverse_quarter_round(kFull, quarter_round(kFull, x)) == x);
    }
  }
}

TEST_CASE("quarter round validation", "[qr]") {
  CHECK_THROWS_AS(quarter_round(kToy4, {16, 0, 0, 0}), std::domain_error);
  const QuarterRoundParams bad{WordSpec{3}, 3, 1, 1, 1};  // r1 = w
  CHECK_THROWS_AS(quarter_round(bad, {0, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("rotate_vec rotates each word in parallel", "[qr]") {
  CHECK(rotate_vec({1, 2, 4, 8}, 1, WordSpec{4}) == WordVec4{2, 4, 8, 1});
}
