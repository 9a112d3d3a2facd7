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

#ifndef DIVIDE2_SEQUENCES_HPP_
#define DIVIDE2_SEQUENCES_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace divide2 {

using Index = std::int64_t;

enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr int to_int(Bit b) { return static_cast<int>(b); }
constexpr Bit flip(Bit b) { return b == Bit::zero ? Bit::one : Bit::zero; }
constexpr Bit bit_of(bool v) { return v ? Bit::one : Bit::zero; }

/// Converts 0/1 to a Bit; anything else is an InputError.
Bit bit_from_int(long long v);

/// A binary sequence on the integers that is constant on both tails.
///
///   chi(n) = left              for n < start
///   chi(n) = core[n - start]   for start <= n < start + |core|
///   chi(n) = right             for n >= start + |core|
///
/// The constructor brings the value into canonical form (core empty, or its
/// first entry differs from `left` and its last entry differs from `right`;
/// constant sequences have start 0), so equality is structural.
class BiSeq {
 public:
  BiSeq(Bit left, Index start, std::vector<Bit> core, Bit right);

  static BiSeq constant(Bit b) { return BiSeq(b, 0, {}, b); }

  Bit left() const { return left_; }
  Bit right() const { return right_; }
  Index start() const { return start_; }
  /// One past the last core index.
  Index end() const { return start_ + static_cast<Index>(core_.size()); }
  std::span<const Bit> core() const { return core_; }

  Bit operator()(Index n) const;

  bool is_constant() const { return core_.empty() && left_ == right_; }

  friend bool operator==(const BiSeq&, const BiSeq&) = default;

 private:
  Bit left_;
  Index start_;
  std::vector<Bit> core_;
  Bit right_;
};

inline Bit eval(const BiSeq& seq, Index n) { return seq(n); }

/// Same sequence with the bit at `n` complemented.
BiSeq flip_at(const BiSeq& seq, Index n);

/// A canonical element of the space of decreasing sequences: the constant-0
/// sequence, a threshold sequence (1 below n, 0 from n on), or constant 1.
/// Ordered as the pointwise order on the sequences they denote.
class ZInfPoint {
 public:
  enum class Kind : std::uint8_t { minus_inf, finite, plus_inf };

  static constexpr ZInfPoint minus_inf() { return ZInfPoint(Kind::minus_inf, 0); }
  static constexpr ZInfPoint plus_inf() { return ZInfPoint(Kind::plus_inf, 0); }
  static constexpr ZInfPoint finite(Index n) { return ZInfPoint(Kind::finite, n); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  /// Threshold of a finite point; 0 for the infinite ones.
  constexpr Index threshold() const { return threshold_; }

  friend constexpr auto operator<=>(const ZInfPoint&, const ZInfPoint&) = default;

 private:
  constexpr ZInfPoint(Kind k, Index n) : kind_(k), threshold_(n) {}

  Kind kind_;
  Index threshold_;
};

BiSeq embed(ZInfPoint p);

bool is_decreasing(const BiSeq& seq);

/// Smallest n with chi(n) < chi(n + 1), if any.
std::optional<Index> first_increase(const BiSeq& seq);

/// Reads off the point of the decreasing sequence. Throws InputError naming
/// the first increasing step when `seq` is not decreasing.
ZInfPoint classify(const BiSeq& seq);

/// True iff a(m) == b(m) for every m with |m| < radius. Requires radius >= 1.
bool agree_within(const BiSeq& a, const BiSeq& b, Index radius);

std::string to_string(Bit b);
std::string to_string(const BiSeq& seq);
std::string to_string(ZInfPoint p);

}  // namespace divide2

#endif  // DIVIDE2_SEQUENCES_HPP_
