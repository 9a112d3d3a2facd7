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

#include "divide2/counterexample.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace divide2 {

// ---------------------------------------------------------------------------
// Patterns and rules

WindowPattern WindowPattern::cut(int w, Index p) {
  Index ones = std::clamp<Index>(p + w, 0, 2 * static_cast<Index>(w) + 1);
  return WindowPattern(w, static_cast<int>(ones));
}

WindowPattern WindowPattern::from_index(int w, int ones) {
  if (w < 0 || ones < 0 || ones > 2 * w + 1) {
    throw InputError("pattern index " + std::to_string(ones) + " out of range for radius " +
                     std::to_string(w));
  }
  return WindowPattern(w, ones);
}

WindowPattern::Kind WindowPattern::kind() const {
  if (ones_ == 0) return Kind::all_zero;
  if (ones_ == 2 * radius_ + 1) return Kind::all_one;
  return Kind::cut;
}

WindowPattern pattern_at(ZInfPoint chi, Index n, int w) {
  switch (chi.kind()) {
    case ZInfPoint::Kind::minus_inf:
      return WindowPattern::all_zero(w);
    case ZInfPoint::Kind::plus_inf:
      return WindowPattern::all_one(w);
    case ZInfPoint::Kind::finite:
      break;
  }
  // chi(n + j) = 1 iff j < threshold - n.
  return WindowPattern::cut(w, chi.threshold() - n);
}

std::string to_string(const WindowPattern& p) {
  switch (p.kind()) {
    case WindowPattern::Kind::all_zero:
      return "allzero";
    case WindowPattern::Kind::all_one:
      return "allone";
    case WindowPattern::Kind::cut:
      break;
  }
  return "cut:" + std::to_string(p.cut_point());
}

WindowPattern parse_pattern(int w, std::string_view key) {
  if (key == "allzero") return WindowPattern::all_zero(w);
  if (key == "allone") return WindowPattern::all_one(w);
  constexpr std::string_view prefix = "cut:";
  if (key.substr(0, prefix.size()) == prefix) {
    std::string_view digits = key.substr(prefix.size());
    Index p = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && end == digits.data() + digits.size() && !digits.empty()) {
      return WindowPattern::cut(w, p);
    }
  }
  throw InputError("unknown window pattern '" + std::string(key) +
                   "' (expected allzero, allone or cut:<int>)");
}

LocalRule::LocalRule(int w, Index d, std::vector<Index> table)
    : w_(w), d_(d), table_(std::move(table)) {
  if (w_ < 0) throw InputError("rule radius must be non-negative");
  if (table_.size() != static_cast<std::size_t>(WindowPattern::count(w_))) {
    throw InputError("rule of radius " + std::to_string(w_) + " needs " +
                     std::to_string(WindowPattern::count(w_)) + " table entries, got " +
                     std::to_string(table_.size()));
  }
  for (std::size_t c = 0; c < table_.size(); ++c) {
    Index v = table_[c];
    const std::string at = to_string(WindowPattern::from_index(w_, static_cast<int>(c)));
    if (v % 2 == 0) throw InputError("offset for " + at + " must be odd, got " + std::to_string(v));
    if (std::llabs(v) > d_) {
      throw InputError("offset for " + at + " exceeds bound " + std::to_string(d_));
    }
  }
}

std::string to_string(const LocalRule& rule) {
  std::string out = "w=" + std::to_string(rule.radius()) + " {";
  for (std::size_t c = 0; c < rule.table().size(); ++c) {
    if (c != 0) out += ", ";
    out += to_string(WindowPattern::from_index(rule.radius(), static_cast<int>(c))) + ": " +
           std::to_string(rule.table()[c]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Families and equivariance

Family family_of_rule(const LocalRule& rule) {
  return [rule](ZInfPoint chi, Index n) {
    return n + rule.offset(pattern_at(chi, n, rule.radius()));
  };
}

Family naive_family(NaiveShift shift) {
  Index delta = shift == NaiveShift::plus_one ? 1 : -1;
  return [delta](ZInfPoint, Index n) { return n + delta; };
}

std::optional<FamilyEquivarianceWitness> find_equivariance_violation(
    const Family& family, std::span<const DihedralElt> gs, std::span<const ZInfPoint> chis,
    std::span<const Index> ns) {
  for (DihedralElt g : gs) {
    for (ZInfPoint chi : chis) {
      for (Index n : ns) {
        Index lhs = family(act_zinf(g, chi), act_int(g, n));
        Index rhs = act_int(g, family(chi, n));
        if (lhs != rhs) return FamilyEquivarianceWitness{g, chi, n, lhs, rhs};
      }
    }
  }
  return std::nullopt;
}

FamilyEquivarianceWitness naive_family_witness(NaiveShift shift) {
  const DihedralElt gs[] = {DihedralElt::t(), DihedralElt::r()};
  const ZInfPoint chis[] = {ZInfPoint::finite(0), ZInfPoint::minus_inf(), ZInfPoint::plus_inf()};
  const Index ns[] = {0, 2, -2, 4, -4};
  auto w = find_equivariance_violation(naive_family(shift), gs, chis, ns);
  if (!w) throw std::logic_error("naive_family_witness: no violation found");
  return *w;
}

bool recheck(const Family& family, const FamilyEquivarianceWitness& w) {
  Index lhs = family(act_zinf(w.g, w.chi), act_int(w.g, w.n));
  Index rhs = act_int(w.g, family(w.chi, w.n));
  return lhs == w.lhs && rhs == w.rhs && lhs != rhs;
}

Verdict<ReflectionWitness> check_r_equivariance(const LocalRule& rule) {
  const int count = WindowPattern::count(rule.radius());
  for (int c = 0; c < count / 2; ++c) {
    auto p = WindowPattern::from_index(rule.radius(), c);
    Index value = rule.offset(p);
    Index partner = rule.offset(p.reflect_complement());
    if (partner != -value) return Verdict<ReflectionWitness>::fail({p, value, partner});
  }
  return Verdict<ReflectionWitness>::pass();
}

bool recheck(const LocalRule& rule, const ReflectionWitness& w) {
  if (w.pattern.radius() != rule.radius()) return false;
  const ZInfPoint chi = ZInfPoint::finite(w.pattern.cut_point());
  if (!(pattern_at(chi, 0, rule.radius()) == w.pattern)) return false;
  auto phi = family_of_rule(rule);
  const DihedralElt r = DihedralElt::r();
  Index lhs = phi(act_zinf(r, chi), act_int(r, 0));
  Index rhs = act_int(r, phi(chi, 0));
  return lhs == w.partner_value && rhs == -w.value && lhs != rhs;
}

// ---------------------------------------------------------------------------
// Eventual linearity and the parity count

namespace {

Index tail_radius(int w, Index k) {
  Index bound = std::max<Index>(w, std::llabs(k));
  return bound % 2 == 0 ? bound + 2 : bound + 1;
}

}  // namespace

TailOutcome eventually_linear(const LocalRule& rule) {
  if (auto v = check_r_equivariance(rule); !v) return v.witness();
  auto phi = family_of_rule(rule);
  const Index k = phi(ZInfPoint::minus_inf(), 0);
  const Index N = tail_radius(rule.radius(), k);
  const Index reach = N + 2 * rule.radius() + 4;
  const ZInfPoint zero_bar = ZInfPoint::finite(0);
  for (Index n = N + 2; n <= reach; n += 2) {
    if (Index got = phi(zero_bar, n); got != n + k) return TailViolation{n, n + k, got};
    if (Index got = phi(zero_bar, -n); got != -n - k) return TailViolation{-n, -n - k, got};
  }
  return LinearTail{k, N};
}

ParityCounts parity_counts(const LinearTail& tail) {
  if (tail.k % 2 == 0) throw InputError("parity_counts: k must be odd");
  if (tail.N <= 0 || tail.N % 2 != 0) throw InputError("parity_counts: N must be positive and even");
  if (tail.N <= std::llabs(tail.k)) throw InputError("parity_counts: need N > |k|");
  // Evens in [-N, N] are 2j for |j| <= N/2. The odd interval [-(N+k), N+k]
  // has odd endpoints, so it holds N + k + 1 odd numbers.
  return {tail.N + 1, tail.N + tail.k + 1};
}

// ---------------------------------------------------------------------------
// Bijectivity

std::string to_string(const BijectivityWitness& w) {
  if (w.kind == BijectivityWitness::Kind::gap) {
    return "phi_" + to_string(w.chi) + ": " + std::to_string(w.value) + " not in image";
  }
  return "phi_" + to_string(w.chi) + ": phi(" + std::to_string(w.first) + ") = phi(" +
         std::to_string(w.second) + ") = " + std::to_string(w.value);
}

namespace {

std::vector<ZInfPoint> bijectivity_probes(const LocalRule& rule) {
  std::vector<ZInfPoint> out{ZInfPoint::minus_inf(), ZInfPoint::plus_inf(), ZInfPoint::finite(0)};
  const Index reach = rule.radius() + rule.bound() + 2;
  for (Index m = 1; m <= reach; ++m) {
    out.push_back(ZInfPoint::finite(-m));
    out.push_back(ZInfPoint::finite(m));
  }
  return out;
}

std::optional<BijectivityWitness> bijectivity_failure(const LocalRule& rule, ZInfPoint chi,
                                                      Index half_width) {
  const Index centre = chi.is_finite() ? chi.threshold() : 0;
  // Even endpoints keep the scan on 2Z.
  Index lo = centre - half_width;
  Index hi = centre + half_width;
  if (lo % 2 != 0) --lo;
  if (hi % 2 != 0) ++hi;

  // Images of evens in [lo, hi] are odd and lie in [lo - d, hi + d]; with an
  // odd base, slot = (y - base) / 2 is exact.
  const Index d = rule.bound();
  const Index base = lo - 2 * d - 1;
  const auto slots = static_cast<std::size_t>((hi + d + 1 - base) / 2 + 1);
  std::vector<Index> preimage(slots, 0);
  std::vector<bool> hit(slots, false);
  const int w = rule.radius();

  for (Index n = lo; n <= hi; n += 2) {
    Index y = n + rule.offset(pattern_at(chi, n, w));
    auto slot = static_cast<std::size_t>((y - base) / 2);
    if (hit[slot]) {
      return BijectivityWitness{BijectivityWitness::Kind::collision, chi, preimage[slot], n, y};
    }
    hit[slot] = true;
    preimage[slot] = n;
  }
  // Every even within d of y was scanned, so a miss here is a real gap.
  Index first_odd = lo + d;
  if (first_odd % 2 == 0) ++first_odd;
  for (Index y = first_odd; y <= hi - d; y += 2) {
    if (!hit[static_cast<std::size_t>((y - base) / 2)]) {
      return BijectivityWitness{BijectivityWitness::Kind::gap, chi, 0, 0, y};
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict<BijectivityWitness> bijectivity_check(const LocalRule& rule, Index extra_margin) {
  if (auto v = check_r_equivariance(rule); !v) {
    throw InputError("bijectivity_check: rule is not r-equivariant at pattern " +
                     to_string(v.witness().pattern));
  }
  if (extra_margin < 0) throw InputError("bijectivity_check: margin must be non-negative");
  const Index w = rule.radius();
  const Index d = rule.bound();
  const Index N = tail_radius(rule.radius(), rule.offset(WindowPattern::all_zero(rule.radius())));
  const Index half_width = N + 2 * w + 3 * d + 4 + extra_margin;
  for (ZInfPoint chi : bijectivity_probes(rule)) {
    if (auto fail = bijectivity_failure(rule, chi, half_width)) {
      return Verdict<BijectivityWitness>::fail(*fail);
    }
  }
  return Verdict<BijectivityWitness>::pass();
}

bool recheck(const LocalRule& rule, const BijectivityWitness& w) {
  auto phi = family_of_rule(rule);
  if (w.kind == BijectivityWitness::Kind::collision) {
    return w.first != w.second && w.first % 2 == 0 && w.second % 2 == 0 &&
           phi(w.chi, w.first) == w.value && phi(w.chi, w.second) == w.value;
  }
  if (w.value % 2 == 0) return false;
  // Offsets are bounded by d, so only evens within d of the value can hit it.
  const Index d = rule.bound();
  for (Index n = w.value - d - 1; n <= w.value + d + 1; ++n) {
    if (n % 2 == 0 && phi(w.chi, n) == w.value) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exhaustive search

std::vector<Index> odd_offsets(Index d) {
  std::vector<Index> out;
  for (Index v = -d; v <= d; ++v) {
    if (v % 2 != 0) out.push_back(v);
  }
  return out;
}

namespace {

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int e = 0; e < exp; ++e) out *= base;
  return out;
}

struct Partial {
  SearchReport counts;
  std::vector<std::pair<std::uint64_t, LocalRule>> survivors;
  std::vector<std::pair<std::uint64_t, Rejection>> rejections;
};

void search_prefix(int w, Index d, const std::vector<Index>& values, std::uint64_t prefix,
                   bool recheck_witnesses, Partial& out) {
  const int count = WindowPattern::count(w);
  const int half = count / 2;
  const auto K = static_cast<std::uint64_t>(values.size());

  std::vector<Index> table(static_cast<std::size_t>(count));
  std::uint64_t digits = prefix;
  for (int c = half - 1; c >= 0; --c) {
    table[static_cast<std::size_t>(c)] = values[digits % K];
    digits /= K;
  }
  for (int c = half; c < count; ++c) {
    table[static_cast<std::size_t>(c)] = -table[static_cast<std::size_t>(count - 1 - c)];
  }

  // Tables sharing entries 0..c-1 with this one but breaking the reflection
  // constraint at entry c: (K - 1) * K^(count - 1 - c) of them for each c.
  for (int c = half; c < count; ++c) {
    const auto partner = static_cast<std::size_t>(count - 1 - c);
    out.counts.not_equivariant += (K - 1) * power(K, count - 1 - c);
    if (!recheck_witnesses) continue;
    for (Index v : values) {
      if (v == table[static_cast<std::size_t>(c)]) continue;
      std::vector<Index> broken = table;
      broken[static_cast<std::size_t>(c)] = v;
      LocalRule rule(w, d, std::move(broken));
      ReflectionWitness witness{WindowPattern::from_index(w, static_cast<int>(partner)),
                                table[partner], v};
      ++out.counts.rechecked;
      if (check_r_equivariance(rule).holds() || !recheck(rule, witness)) {
        ++out.counts.recheck_failures;
      }
    }
  }

  LocalRule rule(w, d, table);
  ++out.counts.equivariant;
  auto verdict = bijectivity_check(rule);
  if (verdict.holds()) {
    out.survivors.emplace_back(prefix, std::move(rule));
    return;
  }
  const auto& witness = verdict.witness();
  if (witness.kind == BijectivityWitness::Kind::collision) {
    ++out.counts.collisions;
  } else {
    ++out.counts.gaps;
  }
  if (recheck_witnesses) {
    ++out.counts.rechecked;
    if (!recheck(rule, witness)) ++out.counts.recheck_failures;
  }
  out.rejections.emplace_back(prefix, Rejection{std::move(rule), witness});
}

}  // namespace

SearchReport exhaustive_search(int w, Index d, SearchOptions options) {
  if (w < 0 || w > kMaxSearchRadius) {
    throw InputError("search radius w must be in [0, " + std::to_string(kMaxSearchRadius) + "]");
  }
  if (d < 1 || d > kMaxSearchBound) {
    throw InputError("offset bound d must be in [1, " + std::to_string(kMaxSearchBound) + "]");
  }
  const std::vector<Index> values = odd_offsets(d);
  const int count = WindowPattern::count(w);
  const std::uint64_t prefixes = power(values.size(), count / 2);
  const unsigned jobs = std::max(1U, options.jobs);

  std::vector<Partial> partials(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned j) {
    try {
      for (std::uint64_t p = j; p < prefixes; p += jobs) {
        search_prefix(w, d, values, p, options.recheck_witnesses, partials[j]);
      }
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SearchReport report;
  report.w = w;
  report.d = d;
  report.candidates = power(values.size(), count);
  std::vector<std::pair<std::uint64_t, LocalRule>> survivors;
  std::vector<std::pair<std::uint64_t, Rejection>> rejections;
  for (auto& part : partials) {
    report.equivariant += part.counts.equivariant;
    report.not_equivariant += part.counts.not_equivariant;
    report.collisions += part.counts.collisions;
    report.gaps += part.counts.gaps;
    report.rechecked += part.counts.rechecked;
    report.recheck_failures += part.counts.recheck_failures;
    std::move(part.survivors.begin(), part.survivors.end(), std::back_inserter(survivors));
    std::move(part.rejections.begin(), part.rejections.end(), std::back_inserter(rejections));
  }
  // Prefix order is lexicographic table order on the equivariant tables.
  auto by_prefix = [](const auto& a, const auto& b) { return a.first < b.first; };
  std::sort(survivors.begin(), survivors.end(), by_prefix);
  std::sort(rejections.begin(), rejections.end(), by_prefix);
  for (auto& s : survivors) report.survivors.push_back(std::move(s.second));
  for (auto& r : rejections) report.rejections.push_back(std::move(r.second));

  if (report.equivariant + report.not_equivariant != report.candidates) {
    throw std::logic_error("exhaustive_search: candidate accounting does not add up");
  }
  return report;
}

}  // namespace divide2
