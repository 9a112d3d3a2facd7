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

#include "divide2/dihedral.hpp"

#include <algorithm>

#include "divide2/error.hpp"

namespace divide2 {

ParityPoint::ParityPoint(Index n, Bit i, Parity parity) : ParityPoint(n, i) {
  if (parity != parity_) {
    throw InputError("parity tag does not match n = " + std::to_string(n));
  }
}

namespace {

BiSeq reflect_complement(const BiSeq& chi) {
  // Core indices start..end-1 land on -(end-1)..-start, reversed and negated.
  std::vector<Bit> core(chi.core().rbegin(), chi.core().rend());
  std::transform(core.begin(), core.end(), core.begin(), flip);
  return BiSeq(flip(chi.right()), 1 - chi.end(), std::move(core), flip(chi.left()));
}

}  // namespace

BiSeq act_seq(DihedralElt g, const BiSeq& chi) {
  std::vector<Bit> core(chi.core().begin(), chi.core().end());
  BiSeq shifted(chi.left(), chi.start() + 2 * g.shift(), std::move(core), chi.right());
  return g.reflects() ? reflect_complement(shifted) : shifted;
}

ZInfPoint act_zinf(DihedralElt g, ZInfPoint p) {
  if (!p.is_finite()) {
    if (!g.reflects()) return p;
    return p.kind() == ZInfPoint::Kind::minus_inf ? ZInfPoint::plus_inf()
                                                  : ZInfPoint::minus_inf();
  }
  Index moved = p.threshold() + 2 * g.shift();
  return ZInfPoint::finite(g.reflects() ? 1 - moved : moved);
}

ParityPoint act_point(DihedralElt g, const ParityPoint& p) {
  return ParityPoint(act_int(g, p.n()), p.i());
}

DihedralElt parse_word(std::string_view word) {
  DihedralElt g;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    DihedralElt letter;
    switch (word[pos]) {
      case 't':
        letter = DihedralElt::t();
        break;
      case 'T':
        letter = DihedralElt::t_inv();
        break;
      case 'r':
        letter = DihedralElt::r();
        break;
      default:
        throw InputError("group word: unexpected character '" + std::string(1, word[pos]) +
                         "' at position " + std::to_string(pos) + " (allowed: t, T, r)");
    }
    g = g * letter;
  }
  return g;
}

std::string to_string(DihedralElt g) {
  return "r^" + std::to_string(g.reflects() ? 1 : 0) + " t^" + std::to_string(g.shift());
}

std::string to_string(const ParityPoint& p) {
  return "(" + std::to_string(p.n()) + ", " + to_string(p.i()) + ")";
}

}  // namespace divide2
