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

#ifndef DIVIDE2_DIHEDRAL_HPP_
#define DIVIDE2_DIHEDRAL_HPP_

#include <string>
#include <string_view>

#include "divide2/sequences.hpp"

namespace divide2 {

/// Element r^s t^a of the infinite dihedral group <t, r | r^2 = 1, rtr = t^-1>,
/// stored in normal form. Elements with s = 0 are translations, elements with
/// s = 1 are reflections.
class DihedralElt {
 public:
  constexpr DihedralElt() = default;
  constexpr DihedralElt(bool reflect, Index shift) : reflect_(reflect), shift_(shift) {}

  static constexpr DihedralElt identity() { return {}; }
  static constexpr DihedralElt t() { return {false, 1}; }
  static constexpr DihedralElt t_inv() { return {false, -1}; }
  static constexpr DihedralElt r() { return {true, 0}; }

  constexpr bool reflects() const { return reflect_; }
  constexpr Index shift() const { return shift_; }

  friend constexpr bool operator==(DihedralElt, DihedralElt) = default;

 private:
  bool reflect_ = false;
  Index shift_ = 0;
};

/// Group product g*h, acting as "h first, then g":
/// (s1, a1)(s2, a2) = (s1 xor s2, a2 + (-1)^s2 * a1).
constexpr DihedralElt mul(DihedralElt g, DihedralElt h) {
  Index carried = h.reflects() ? -g.shift() : g.shift();
  return {g.reflects() != h.reflects(), h.shift() + carried};
}

constexpr DihedralElt operator*(DihedralElt g, DihedralElt h) { return mul(g, h); }

constexpr DihedralElt inv(DihedralElt g) {
  // r t^a is an involution; (t^a)^-1 = t^-a.
  return g.reflects() ? g : DihedralElt(false, -g.shift());
}

enum class Parity : std::uint8_t { even, odd };

constexpr Parity parity_of(Index n) { return (n % 2 == 0) ? Parity::even : Parity::odd; }

/// An element (n, i) of 2Z x 2 or (2Z+1) x 2, tagged with its parity class.
class ParityPoint {
 public:
  ParityPoint(Index n, Bit i) : n_(n), i_(i), parity_(parity_of(n)) {}
  /// Throws InputError if `parity` disagrees with n.
  ParityPoint(Index n, Bit i, Parity parity);

  Index n() const { return n_; }
  Bit i() const { return i_; }
  Parity parity() const { return parity_; }

  friend bool operator==(const ParityPoint&, const ParityPoint&) = default;

 private:
  Index n_;
  Bit i_;
  Parity parity_;
};

/// t.n = n + 2, r.n = -n; so r^s t^a . n = (-1)^s (n + 2a).
constexpr Index act_int(DihedralElt g, Index n) {
  Index moved = n + 2 * g.shift();
  return g.reflects() ? -moved : moved;
}

/// (t.chi)(n) = chi(n - 2), (r.chi)(n) = 1 - chi(-n).
BiSeq act_seq(DihedralElt g, const BiSeq& chi);

/// Restriction of act_seq to decreasing sequences: t.nbar = (n+2)bar,
/// r.nbar = (1-n)bar, r swaps -inf and +inf.
ZInfPoint act_zinf(DihedralElt g, ZInfPoint p);

/// Acts on n, trivially on the bit.
ParityPoint act_point(DihedralElt g, const ParityPoint& p);

/// Parses a word over {t, T, r} (T = t^-1) into the product of its letters
/// read left to right, so the rightmost letter acts first. The empty word is
/// the identity. Throws InputError with the offending position.
DihedralElt parse_word(std::string_view word);

/// "r^s t^a".
std::string to_string(DihedralElt g);
std::string to_string(const ParityPoint& p);

}  // namespace divide2

#endif  // DIVIDE2_DIHEDRAL_HPP_
