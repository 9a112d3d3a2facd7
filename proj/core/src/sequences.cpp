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

#include "divide2/sequences.hpp"

#include <algorithm>
#include <sstream>

#include "divide2/error.hpp"

namespace divide2 {

Bit bit_from_int(long long v) {
  if (v != 0 && v != 1) {
    throw InputError("expected a bit (0 or 1), got " + std::to_string(v));
  }
  return bit_of(v == 1);
}

BiSeq::BiSeq(Bit left, Index start, std::vector<Bit> core, Bit right)
    : left_(left), start_(start), core_(std::move(core)), right_(right) {
  auto first = std::find_if(core_.begin(), core_.end(),
                            [&](Bit b) { return b != left_; });
  start_ += first - core_.begin();
  core_.erase(core_.begin(), first);
  while (!core_.empty() && core_.back() == right_) core_.pop_back();
  if (core_.empty() && left_ == right_) start_ = 0;
}

Bit BiSeq::operator()(Index n) const {
  if (n < start_) return left_;
  if (n >= end()) return right_;
  return core_[static_cast<std::size_t>(n - start_)];
}

BiSeq flip_at(const BiSeq& seq, Index n) {
  Index lo = std::min(seq.start(), n);
  Index hi = std::max(seq.end(), n + 1);
  std::vector<Bit> core;
  core.reserve(static_cast<std::size_t>(hi - lo));
  for (Index m = lo; m < hi; ++m) core.push_back(m == n ? flip(seq(m)) : seq(m));
  return BiSeq(seq.left(), lo, std::move(core), seq.right());
}

BiSeq embed(ZInfPoint p) {
  switch (p.kind()) {
    case ZInfPoint::Kind::minus_inf:
      return BiSeq::constant(Bit::zero);
    case ZInfPoint::Kind::plus_inf:
      return BiSeq::constant(Bit::one);
    case ZInfPoint::Kind::finite:
      break;
  }
  return BiSeq(Bit::one, p.threshold(), {}, Bit::zero);
}

std::optional<Index> first_increase(const BiSeq& seq) {
  // Steps can only occur at start-1 .. end-1.
  for (Index n = seq.start() - 1; n < seq.end(); ++n) {
    if (seq(n) == Bit::zero && seq(n + 1) == Bit::one) return n;
  }
  return std::nullopt;
}

bool is_decreasing(const BiSeq& seq) { return !first_increase(seq).has_value(); }

ZInfPoint classify(const BiSeq& seq) {
  if (auto bad = first_increase(seq)) {
    throw InputError("sequence is not decreasing: chi(" + std::to_string(*bad) +
                     ") = 0 but chi(" + std::to_string(*bad + 1) + ") = 1");
  }
  if (seq.is_constant()) {
    return seq.left() == Bit::zero ? ZInfPoint::minus_inf() : ZInfPoint::plus_inf();
  }
  // Canonical decreasing non-constant: left 1, empty core, right 0.
  return ZInfPoint::finite(seq.start());
}

bool agree_within(const BiSeq& a, const BiSeq& b, Index radius) {
  if (radius < 1) throw InputError("agreement radius must be positive");
  // a(m) - b(m) is constant left of lo and right of hi.
  Index lo = std::min(a.start(), b.start());
  Index hi = std::max(a.end(), b.end());
  Index from = -(radius - 1);
  Index to = radius - 1;
  auto same = [&](Index m) { return a(m) == b(m); };
  if (!same(from) || !same(to)) return false;
  for (Index m = std::max(from, lo); m <= std::min(to, hi); ++m) {
    if (!same(m)) return false;
  }
  return true;
}

std::string to_string(Bit b) { return b == Bit::one ? "1" : "0"; }

std::string to_string(const BiSeq& seq) {
  std::ostringstream out;
  out << "{left=" << to_int(seq.left()) << ", start=" << seq.start() << ", core=[";
  bool first = true;
  for (Bit b : seq.core()) {
    out << (first ? "" : ",") << to_int(b);
    first = false;
  }
  out << "], right=" << to_int(seq.right()) << "}";
  return out.str();
}

std::string to_string(ZInfPoint p) {
  switch (p.kind()) {
    case ZInfPoint::Kind::minus_inf:
      return "-inf";
    case ZInfPoint::Kind::plus_inf:
      return "+inf";
    case ZInfPoint::Kind::finite:
      break;
  }
  return "nbar:" + std::to_string(p.threshold());
}

}  // namespace divide2
