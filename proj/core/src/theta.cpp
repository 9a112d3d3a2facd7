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

#include "divide2/theta.hpp"

#include <cstdlib>

namespace divide2 {

namespace {

void require_even(const ParityPoint& p, const char* what) {
  if (p.parity() != Parity::even) {
    throw InputError(std::string(what) + ": point must lie in 2Z x 2, got n = " +
                     std::to_string(p.n()));
  }
}

}  // namespace

ThetaResult theta(const BiSeq& chi, const ParityPoint& p) {
  const Index n = p.n();
  const std::array<Index, 3> window{n - 1, n, n + 1};
  if (p.i() == chi(n)) {
    return {ParityPoint(n + 1, flip(chi(n + 1))), window};
  }
  return {ParityPoint(n - 1, chi(n - 1)), window};
}

Verdict<SelfInverseWitness> theta_selfinv_check(const BiSeq& chi, const ParityPoint& p) {
  ParityPoint mid = theta(chi, p).point;
  ParityPoint back = theta(chi, mid).point;
  if (back == p) return Verdict<SelfInverseWitness>::pass();
  return Verdict<SelfInverseWitness>::fail({chi, p, mid, back});
}

Verdict<ThetaEquivarianceWitness> theta_equivariance_check(DihedralElt g, const BiSeq& chi,
                                                           const ParityPoint& p) {
  require_even(p, "theta_equivariance_check");
  ParityPoint lhs = theta(act_seq(g, chi), act_point(g, p)).point;
  ParityPoint rhs = act_point(g, theta(chi, p).point);
  if (lhs == rhs) return Verdict<ThetaEquivarianceWitness>::pass();
  return Verdict<ThetaEquivarianceWitness>::fail({g, chi, p, lhs, rhs});
}

Index theta_window(const BiSeq& /*chi*/, const ParityPoint& p) {
  require_even(p, "theta_window");
  return std::llabs(p.n()) + 2;
}

TightnessWitness tightness_witness(const BiSeq& chi, Index n) {
  ParityPoint p(n, chi(n));
  BiSeq perturbed = flip_at(chi, n + 1);
  return {chi, perturbed, p, theta(chi, p).point, theta(perturbed, p).point};
}

}  // namespace divide2
