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

#ifndef DIVIDE2_THETA_HPP_
#define DIVIDE2_THETA_HPP_

#include <array>

#include "divide2/dihedral.hpp"
#include "divide2/error.hpp"
#include "divide2/sequences.hpp"

namespace divide2 {

struct ThetaResult {
  ParityPoint point;
  /// The indices n-1, n, n+1 of chi that the value was read from.
  std::array<Index, 3> window;
};

/// The bijection theta_chi : 2Z x 2 -> (2Z+1) x 2,
///
///   theta_chi(n, i) = (n + 1, 1 - chi(n + 1))   if i == chi(n)
///                     (n - 1, chi(n - 1))       otherwise.
///
/// The same formula applied to an odd point is the inverse map, so any
/// parity is accepted and the output parity is always flipped.
ThetaResult theta(const BiSeq& chi, const ParityPoint& p);

struct SelfInverseWitness {
  BiSeq chi;
  ParityPoint input;
  ParityPoint intermediate;
  ParityPoint round_trip;
};

Verdict<SelfInverseWitness> theta_selfinv_check(const BiSeq& chi, const ParityPoint& p);

struct ThetaEquivarianceWitness {
  DihedralElt g;
  BiSeq chi;
  ParityPoint p;
  ParityPoint lhs;  // theta_{g.chi}(g.p)
  ParityPoint rhs;  // g.theta_chi(p)
};

/// Checks theta_{g.chi}(g.p) == g.theta_chi(p). Requires an even point.
Verdict<ThetaEquivarianceWitness> theta_equivariance_check(DihedralElt g, const BiSeq& chi,
                                                           const ParityPoint& p);

/// A modulus of continuity centred at 0: any chi' agreeing with chi on
/// |m| < theta_window(chi, p) gives the same image. Returns |n| + 2.
/// Requires an even point.
Index theta_window(const BiSeq& chi, const ParityPoint& p);

struct TightnessWitness {
  BiSeq chi;
  BiSeq perturbed;  // chi with bit n+1 flipped
  ParityPoint p;
  ParityPoint before;
  ParityPoint after;
};

/// Flipping chi(n+1) always changes theta_chi(n, chi(n)), showing the
/// dependence window cannot be shrunk on the right. Returns the pair of
/// differing images.
TightnessWitness tightness_witness(const BiSeq& chi, Index n);

}  // namespace divide2

#endif  // DIVIDE2_THETA_HPP_
