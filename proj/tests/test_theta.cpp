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
#include "divide2/theta.hpp"
#include "oracles.hpp"

using namespace divide2;

namespace {

BiSeq random_biseq(std::mt19937_64& rng) {
  std::vector<Bit> core(rng() % 9);
  for (auto& b : core) b = bit_of(rng() % 2);
  return BiSeq(bit_of(rng() % 2), static_cast<Index>(rng() % 31) - 15, std::move(core),
               bit_of(rng() % 2));
}

ParityPoint random_even(std::mt19937_64& rng) {
  return ParityPoint(2 * (static_cast<Index>(rng() % 41) - 20), bit_of(rng() % 2));
}

}  // namespace

TEST_CASE("theta on the threshold sequence 0bar") {
  const BiSeq zero_bar = embed(ZInfPoint::finite(0));
  CHECK(theta(zero_bar, ParityPoint(0, Bit::zero)).point == ParityPoint(1, Bit::one));
  CHECK(theta(zero_bar, ParityPoint(0, Bit::one)).point == ParityPoint(-1, Bit::one));
  auto res = theta(zero_bar, ParityPoint(0, Bit::zero));
  CHECK(res.window == std::array<Index, 3>{-1, 0, 1});
}

TEST_CASE("theta on the constant-0 sequence takes the first branch for i = 0") {
  const BiSeq minus_inf = embed(ZInfPoint::minus_inf());
  for (Index n = -10; n <= 10; n += 2) {
    CHECK(theta(minus_inf, ParityPoint(n, Bit::zero)).point == ParityPoint(n + 1, Bit::one));
  }
}

TEST_CASE("theta agrees with the defining cases") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    BiSeq chi = random_biseq(rng);
    Index n = static_cast<Index>(rng() % 61) - 30;
    int i = static_cast<int>(rng() % 2);
    auto [m, j] = oracle::theta(oracle::of(chi), n, i);
    auto got = theta(chi, ParityPoint(n, bit_of(i))).point;
    CHECK(got.n() == m);
    CHECK(to_int(got.i()) == j);
    CHECK(got.parity() != parity_of(n));
  }
}

TEST_CASE("theta is its own inverse") {
  CHECK(theta_selfinv_check(embed(ZInfPoint::finite(0)), ParityPoint(0, Bit::zero)));
  CHECK(theta_selfinv_check(embed(ZInfPoint::plus_inf()), ParityPoint(4, Bit::one)));
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 2000; ++trial) {
    BiSeq chi = random_biseq(rng);
    ParityPoint p(static_cast<Index>(rng() % 61) - 30, bit_of(rng() % 2));
    CHECK(theta_selfinv_check(chi, p).holds());
  }
}

TEST_CASE("theta is equivariant") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 1000; ++trial) {
    BiSeq chi = random_biseq(rng);
    ParityPoint p = random_even(rng);
    CHECK(theta_equivariance_check(DihedralElt::t(), chi, p).holds());
    CHECK(theta_equivariance_check(DihedralElt::r(), chi, p).holds());
    auto word = oracle::random_word(rng, 8);
    CHECK(theta_equivariance_check(oracle::reduce(word), chi, p).holds());
  }
  CHECK_THROWS_AS(theta_equivariance_check(DihedralElt::t(), BiSeq::constant(Bit::zero),
                                           ParityPoint(1, Bit::zero)),
                  InputError);
}

TEST_CASE("a non-equivariant action on sequences breaks the check") {
  // Sanity check that the checker can fail: evaluate theta with r acting on chi
  // without the complement, i.e. chi -> chi(-n).
  const BiSeq zero_bar = embed(ZInfPoint::finite(0));
  const ParityPoint p(0, Bit::zero);
  BiSeq mirrored(Bit::zero, 1, {}, Bit::one);  // n -> 0bar(-n)
  ParityPoint lhs = theta(mirrored, act_point(DihedralElt::r(), p)).point;
  ParityPoint rhs = act_point(DihedralElt::r(), theta(zero_bar, p).point);
  CHECK_FALSE(lhs == rhs);
}

TEST_CASE("theta_window") {
  const BiSeq chi = embed(ZInfPoint::finite(0));
  CHECK(theta_window(chi, ParityPoint(0, Bit::one)) == 2);
  CHECK(theta_window(chi, ParityPoint(6, Bit::zero)) == 8);
  CHECK(theta_window(chi, ParityPoint(-6, Bit::zero)) == 8);
  CHECK_THROWS_AS(theta_window(chi, ParityPoint(3, Bit::zero)), InputError);
}

TEST_CASE("perturbing chi outside the window never changes theta") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 2000; ++trial) {
    BiSeq chi = random_biseq(rng);
    ParityPoint p = random_even(rng);
    const Index radius = theta_window(chi, p);
    // Flip one or more bits at |m| >= radius, and sometimes a whole tail.
    BiSeq other = chi;
    for (int k = 0; k < 3; ++k) {
      Index m = radius + static_cast<Index>(rng() % 20);
      other = flip_at(other, rng() % 2 ? m : -m);
    }
    REQUIRE(agree_within(chi, other, radius));
    CHECK(theta(other, p).point == theta(chi, p).point);
  }
}

TEST_CASE("dependence on chi(n+1) is real") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    BiSeq chi = random_biseq(rng);
    Index n = 2 * (static_cast<Index>(rng() % 21) - 10);
    auto w = tightness_witness(chi, n);
    CHECK_FALSE(w.before == w.after);
    CHECK(w.perturbed(n + 1) != chi(n + 1));
    CHECK(agree_within(chi, w.perturbed, std::llabs(n + 1)));
  }
}
