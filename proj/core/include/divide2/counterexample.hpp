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

#ifndef DIVIDE2_COUNTEREXAMPLE_HPP_
#define DIVIDE2_COUNTEREXAMPLE_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divide2/dihedral.hpp"
#include "divide2/error.hpp"
#include "divide2/sequences.hpp"

namespace divide2 {

/// The restriction of a decreasing sequence to the window [-w, w]: bits are 1
/// at offsets below the cut point p and 0 from p on. There are 2w + 2 such
/// patterns, indexed by their number of ones; the extremes are stored as
/// AllZero (p <= -w) and AllOne (p >= w + 1).
class WindowPattern {
 public:
  enum class Kind : std::uint8_t { all_zero, cut, all_one };

  static WindowPattern all_zero(int w) { return WindowPattern(w, 0); }
  static WindowPattern all_one(int w) { return WindowPattern(w, 2 * w + 1); }
  /// Clips p to the named forms at either end.
  static WindowPattern cut(int w, Index p);
  static WindowPattern from_index(int w, int ones);
  static int count(int w) { return 2 * w + 2; }

  int radius() const { return radius_; }
  int index() const { return ones_; }
  Kind kind() const;
  Index cut_point() const { return ones_ - radius_; }
  /// Bit at offset j, -w <= j <= w.
  Bit bit(int j) const { return bit_of(j < cut_point()); }

  /// Pattern of r.chi at -n, given the pattern of chi at n: Cut(p) -> Cut(1-p).
  WindowPattern reflect_complement() const { return WindowPattern(radius_, 2 * radius_ + 1 - ones_); }

  friend bool operator==(const WindowPattern&, const WindowPattern&) = default;

 private:
  WindowPattern(int w, int ones) : radius_(w), ones_(ones) {}

  int radius_;
  int ones_;
};

/// Pattern of chi on [n - w, n + w], re-centred at 0.
WindowPattern pattern_at(ZInfPoint chi, Index n, int w);

/// "allzero", "allone" or "cut:p".
std::string to_string(const WindowPattern& p);
/// Accepts the forms printed by to_string, and "cut:p" for any p.
WindowPattern parse_pattern(int w, std::string_view key);

/// A finitely tabulated candidate family: phi_chi(n) = n + table[pattern of chi
/// around n]. Every offset is odd and bounded by d in absolute value.
class LocalRule {
 public:
  /// Table indexed by WindowPattern::index(). Throws InputError if it is not
  /// total, has an even entry, or exceeds the bound.
  LocalRule(int w, Index d, std::vector<Index> table);

  int radius() const { return w_; }
  Index bound() const { return d_; }
  std::span<const Index> table() const { return table_; }
  Index offset(const WindowPattern& p) const { return table_[static_cast<std::size_t>(p.index())]; }

  friend bool operator==(const LocalRule&, const LocalRule&) = default;

 private:
  int w_;
  Index d_;
  std::vector<Index> table_;
};

std::string to_string(const LocalRule& rule);

/// A family of maps 2Z -> 2Z+1 indexed by decreasing sequences.
using Family = std::function<Index(ZInfPoint, Index)>;

/// Translation-equivariant by construction, with modulus w around n.
Family family_of_rule(const LocalRule& rule);

enum class NaiveShift : std::uint8_t { plus_one, minus_one };

/// phi_chi(n) = n + 1 (or n - 1), ignoring chi.
Family naive_family(NaiveShift shift);

struct FamilyEquivarianceWitness {
  DihedralElt g;
  ZInfPoint chi;
  Index n;
  Index lhs;  // phi_{g.chi}(g.n)
  Index rhs;  // g.phi_chi(n)

  friend bool operator==(const FamilyEquivarianceWitness&, const FamilyEquivarianceWitness&) = default;
};

/// First (g, chi, n), in the order given, with phi_{g.chi}(g.n) != g.phi_chi(n).
std::optional<FamilyEquivarianceWitness> find_equivariance_violation(
    const Family& family, std::span<const DihedralElt> gs, std::span<const ZInfPoint> chis,
    std::span<const Index> ns);

/// A concrete failure of equivariance for the constant-shift family. Tries t
/// before r; t never fails since both sides equal n + 2 +/- 1.
FamilyEquivarianceWitness naive_family_witness(NaiveShift shift = NaiveShift::plus_one);

/// Recomputes both sides of the witness through the group actions and
/// confirms they match the recorded values and differ.
bool recheck(const Family& family, const FamilyEquivarianceWitness& w);

struct ReflectionWitness {
  WindowPattern pattern;
  Index value;          // table[pattern]
  Index partner_value;  // table[pattern.reflect_complement()], should be -value

  friend bool operator==(const ReflectionWitness&, const ReflectionWitness&) = default;
};

/// r-equivariance of family_of_rule(rule) is equivalent to
/// table[reflect_complement(P)] == -table[P] for every pattern P. Reports the
/// lowest-index pattern of the first failing pair.
Verdict<ReflectionWitness> check_r_equivariance(const LocalRule& rule);

/// Realises the witness pattern at n = 0 with chi = nbar(p) and confirms
/// phi_{r.chi}(r.0) != r.phi_chi(0) pointwise.
bool recheck(const LocalRule& rule, const ReflectionWitness& w);

/// Parameters of the eventually linear shape of phi at the threshold sequence
/// 0bar: phi(n) = n + k for n > N and n - k for n < -N.
struct LinearTail {
  Index k;
  Index N;

  friend bool operator==(const LinearTail&, const LinearTail&) = default;
};

struct TailViolation {
  Index n;
  Index expected;
  Index actual;

  friend bool operator==(const TailViolation&, const TailViolation&) = default;
};

using TailOutcome = std::variant<LinearTail, TailViolation, ReflectionWitness>;

/// k = phi_{-inf}(0), N = least even integer > max(w, |k|). Checks both tail
/// identities at every even n with N < |n| <= N + 2w + 4. Returns the
/// reflection witness instead if the rule is not r-equivariant.
TailOutcome eventually_linear(const LocalRule& rule);

struct ParityCounts {
  Index evens;  // |[-N, N] cap 2Z|
  Index odds;   // |[-N-k, N+k] cap (2Z+1)|

  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Counts the two sets that a bijection phi_{0bar} would have to put in
/// correspondence. Requires k odd, N even and N > |k|; the first count is then
/// odd and the second even.
ParityCounts parity_counts(const LinearTail& tail);

struct BijectivityWitness {
  enum class Kind : std::uint8_t { collision, gap };

  Kind kind;
  ZInfPoint chi;
  Index first;   // collision: the smaller even preimage; gap: unused (0)
  Index second;  // collision: the larger even preimage; gap: unused (0)
  Index value;   // collision: the shared image; gap: the odd value missed

  friend bool operator==(const BijectivityWitness&, const BijectivityWitness&) = default;
};

std::string to_string(const BijectivityWitness& w);

/// Decides whether phi_chi is a bijection 2Z -> 2Z+1 for chi = -inf, +inf and
/// every nbar(m) with |m| <= w + d + 2 (in order of |m|, then m). Offsets are
/// constant outside [m - w - 1, m + w], so it suffices to look at the window
/// |n - m| <= N + 2w + 3d + 4 (+ extra_margin). Throws InputError if the
/// rule is not r-equivariant.
Verdict<BijectivityWitness> bijectivity_check(const LocalRule& rule, Index extra_margin = 0);

/// Confirms a collision or gap directly from the family, without any window.
bool recheck(const LocalRule& rule, const BijectivityWitness& w);

struct SearchOptions {
  unsigned jobs = 1;
  /// Re-verify every witness (including a representative of each block of
  /// non-equivariant tables) while searching.
  bool recheck_witnesses = false;
};

struct Rejection {
  LocalRule rule;
  BijectivityWitness witness;

  friend bool operator==(const Rejection&, const Rejection&) = default;
};

struct SearchReport {
  int w = 0;
  Index d = 0;
  std::uint64_t candidates = 0;
  std::uint64_t equivariant = 0;
  std::uint64_t not_equivariant = 0;
  std::uint64_t collisions = 0;
  std::uint64_t gaps = 0;
  std::uint64_t rechecked = 0;
  std::uint64_t recheck_failures = 0;
  std::vector<LocalRule> survivors;
  /// One per equivariant candidate that failed bijectivity, in table order.
  std::vector<Rejection> rejections;

  friend bool operator==(const SearchReport&, const SearchReport&) = default;
};

inline constexpr int kMaxSearchRadius = 4;
inline constexpr Index kMaxSearchBound = 9;

/// Runs every rule of radius w and offset bound d through check_r_equivariance
/// and bijectivity_check. Tables are visited in lexicographic order; once a
/// prefix forces an r-equivariance failure the whole block of completions is
/// counted at once. Requires 0 <= w <= 4 and 1 <= d <= 9.
SearchReport exhaustive_search(int w, Index d, SearchOptions options = {});

/// The odd offsets -d..d in ascending order.
std::vector<Index> odd_offsets(Index d);

}  // namespace divide2

#endif  // DIVIDE2_COUNTEREXAMPLE_HPP_
