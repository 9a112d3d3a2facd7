// Copyright 2026 The divide2 Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <doctest.h>

#include "divide2/error.hpp"
#include "divide2/sequences.hpp"
#include "oracles.hpp"

using namespace divide2;

namespace {

BiSeq random_biseq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<Index> start(-12, 12);
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::vector<Bit> core(len(rng));
  for (auto& b : core) b = bit_of(coin(rng));
  return BiSeq(bit_of(coin(rng)), start(rng), std::move(core), bit_of(coin(rng)));
}

}  // namespace

TEST_CASE("eval follows the representation") {
  CHECK(eval(embed(ZInfPoint::finite(0)), -1) == Bit::one);
  CHECK(eval(embed(ZInfPoint::minus_inf()), 7) == Bit::zero);
  BiSeq s(Bit::one, 0, {Bit::zero, Bit::one}, Bit::zero);
  CHECK(eval(s, 1) == Bit::one);
  CHECK(eval(s, 0) == Bit::zero);
  CHECK(eval(s, -1) == Bit::one);
  CHECK(eval(s, 2) == Bit::zero);
}

TEST_CASE("embed produces canonical threshold sequences") {
  CHECK(embed(ZInfPoint::finite(0)) == BiSeq(Bit::one, 0, {}, Bit::zero));
  CHECK(embed(ZInfPoint::plus_inf()) == BiSeq::constant(Bit::one));
  CHECK(eval(embed(ZInfPoint::finite(3)), 2) == Bit::one);
  CHECK(eval(embed(ZInfPoint::finite(3)), 3) == Bit::zero);
  for (Index m = -20; m <= 20; ++m) {
    CHECK(oracle::agree_on(oracle::of(embed(ZInfPoint::finite(m))), oracle::threshold(m), -40, 40));
  }
}

TEST_CASE("canonical form strips redundant core entries") {
  BiSeq padded(Bit::one, -3, {Bit::one, Bit::one, Bit::one, Bit::zero, Bit::zero}, Bit::zero);
  CHECK(padded == embed(ZInfPoint::finite(0)));
  CHECK(padded.core().empty());
  CHECK(padded.start() == 0);

  BiSeq constant(Bit::zero, 17, {Bit::zero, Bit::zero}, Bit::zero);
  CHECK(constant == BiSeq::constant(Bit::zero));
  CHECK(constant.start() == 0);

  BiSeq bump(Bit::zero, 4, {Bit::zero, Bit::one, Bit::zero}, Bit::zero);
  CHECK(bump.start() == 5);
  CHECK(bump.core().size() == 1);
}

TEST_CASE("canonicalisation is idempotent and preserves values") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    BiSeq s = random_biseq(rng);
    BiSeq again(s.left(), s.start(), {s.core().begin(), s.core().end()}, s.right());
    CHECK(again == s);
    if (!s.core().empty()) {
      CHECK(s.core().front() != s.left());
      CHECK(s.core().back() != s.right());
    }
  }
}

TEST_CASE("is_decreasing") {
  CHECK(is_decreasing(embed(ZInfPoint::finite(5))));
  CHECK_FALSE(is_decreasing(BiSeq(Bit::zero, 0, {}, Bit::one)));
  CHECK(is_decreasing(embed(ZInfPoint::minus_inf())));
  CHECK_FALSE(is_decreasing(BiSeq(Bit::one, 0, {Bit::zero, Bit::one}, Bit::zero)));
  CHECK(first_increase(BiSeq(Bit::one, 0, {Bit::zero, Bit::one}, Bit::zero)) == Index{0});
}

TEST_CASE("is_decreasing agrees with a pointwise scan") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    BiSeq s = random_biseq(rng);
    auto f = oracle::of(s);
    bool decreasing = true;
    for (Index n = -30; n < 30; ++n) decreasing = decreasing && f(n) >= f(n + 1);
    CHECK(is_decreasing(s) == decreasing);
  }
}

TEST_CASE("classify") {
  CHECK(classify(embed(ZInfPoint::finite(-2))) == ZInfPoint::finite(-2));
  CHECK(classify(BiSeq::constant(Bit::one)) == ZInfPoint::plus_inf());
  CHECK(classify(BiSeq::constant(Bit::zero)) == ZInfPoint::minus_inf());
  CHECK(classify(BiSeq(Bit::one, 4, {}, Bit::zero)) == ZInfPoint::finite(4));
  CHECK_THROWS_AS(classify(BiSeq(Bit::zero, 0, {}, Bit::one)), InputError);
  CHECK_THROWS_WITH(classify(BiSeq(Bit::one, 2, {Bit::zero, Bit::one}, Bit::zero)),
                    doctest::Contains("chi(2) = 0 but chi(3) = 1"));
}

TEST_CASE("embed and classify round trip") {
  CHECK(classify(embed(ZInfPoint::minus_inf())) == ZInfPoint::minus_inf());
  CHECK(classify(embed(ZInfPoint::plus_inf())) == ZInfPoint::plus_inf());
  for (Index m = -50; m <= 50; ++m) {
    CHECK(classify(embed(ZInfPoint::finite(m))) == ZInfPoint::finite(m));
  }
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    BiSeq s = random_biseq(rng);
    if (is_decreasing(s)) CHECK(embed(classify(s)) == s);
  }
}

TEST_CASE("agree_within") {
  const BiSeq zero_bar = embed(ZInfPoint::finite(0));
  const BiSeq minus_inf = embed(ZInfPoint::minus_inf());
  // Only m = 0 is inside |m| < 1, and both are 0 there.
  CHECK(agree_within(zero_bar, minus_inf, 1));
  CHECK_FALSE(agree_within(zero_bar, minus_inf, 2));
  CHECK(agree_within(zero_bar, zero_bar, 1000));
  CHECK_THROWS_AS(agree_within(zero_bar, zero_bar, 0), InputError);
  // Far tails only: differ everywhere below -100.
  BiSeq a(Bit::zero, -100, {Bit::one}, Bit::one);
  CHECK(agree_within(a, BiSeq::constant(Bit::one), 101));
  CHECK_FALSE(agree_within(a, BiSeq::constant(Bit::one), 102));
}

TEST_CASE("agree_within matches brute force and is monotone in the radius") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 500; ++trial) {
    BiSeq a = random_biseq(rng);
    BiSeq b = random_biseq(rng);
    bool previous = true;
    for (Index radius = 1; radius <= 20; ++radius) {
      bool got = agree_within(a, b, radius);
      CHECK(got == oracle::agree_on(oracle::of(a), oracle::of(b), -(radius - 1), radius - 1));
      if (!previous) CHECK_FALSE(got);
      previous = got;
    }
  }
}

TEST_CASE("pointwise order of -inf < mbar < nbar < +inf") {
  std::vector<ZInfPoint> chain{ZInfPoint::minus_inf(), ZInfPoint::finite(-3), ZInfPoint::finite(0),
                               ZInfPoint::finite(4), ZInfPoint::plus_inf()};
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    BiSeq lo = embed(chain[k]);
    BiSeq hi = embed(chain[k + 1]);
    bool strict = false;
    for (Index i = -10; i <= 10; ++i) {
      CHECK(to_int(lo(i)) <= to_int(hi(i)));
      strict = strict || lo(i) != hi(i);
    }
    CHECK(strict);
    CHECK(chain[k] < chain[k + 1]);
  }
}

TEST_CASE("flip_at changes exactly one bit") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 200; ++trial) {
    BiSeq s = random_biseq(rng);
    Index at = static_cast<Index>(rng() % 41) - 20;
    BiSeq t = flip_at(s, at);
    for (Index n = -40; n <= 40; ++n) CHECK((s(n) != t(n)) == (n == at));
  }
}

TEST_CASE("bit_from_int rejects non-bits") {
  CHECK(bit_from_int(1) == Bit::one);
  CHECK_THROWS_AS(bit_from_int(2), InputError);
}
