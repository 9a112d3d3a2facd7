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

// Brute-force reference implementations used only by the tests. Nothing here
// calls the code paths it is used to check: sequences are plain functions,
// group elements are unreduced words, instances are label maps.
#ifndef DIVIDE2_TESTS_ORACLES_HPP_
#define DIVIDE2_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "divide2/bernstein.hpp"
#include "divide2/dihedral.hpp"
#include "divide2/sequences.hpp"

namespace oracle {

using divide2::Bit;
using divide2::Index;

/// A sequence as an arbitrary function Z -> {0, 1}.
using Fn = std::function<int(Index)>;

inline Fn of(const divide2::BiSeq& s) {
  return [s](Index n) { return divide2::to_int(s(n)); };
}

inline Fn threshold(Index m) {
  return [m](Index i) { return i < m ? 1 : 0; };
}

/// Generators as letters; a word acts right to left.
enum class Gen { t, t_inv, r };
using Word = std::vector<Gen>;

inline Index act(Gen g, Index n) {
  switch (g) {
    case Gen::t: return n + 2;
    case Gen::t_inv: return n - 2;
    case Gen::r: return -n;
  }
  return n;
}

inline Index act(const Word& w, Index n) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) n = act(*it, n);
  return n;
}

inline Fn act(Gen g, Fn chi) {
  switch (g) {
    case Gen::t: return [chi](Index n) { return chi(n - 2); };
    case Gen::t_inv: return [chi](Index n) { return chi(n + 2); };
    case Gen::r: return [chi](Index n) { return 1 - chi(-n); };
  }
  return chi;
}

inline Fn act(const Word& w, Fn chi) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) chi = act(*it, chi);
  return chi;
}

inline divide2::DihedralElt reduce(const Word& w) {
  // Collect letters into r^s t^a by pushing each t past the reflections on
  // its left: t^a r = r t^-a.
  bool s = false;
  Index a = 0;
  for (Gen g : w) {
    if (g == Gen::r) {
      s = !s;
      a = -a;
    } else {
      a += g == Gen::t ? 1 : -1;
    }
  }
  return {s, a};
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 2);
  Word w(len(rng));
  for (auto& g : w) g = static_cast<Gen>(letter(rng));
  return w;
}

inline bool agree_on(const Fn& a, const Fn& b, Index lo, Index hi) {
  for (Index n = lo; n <= hi; ++n) {
    if (a(n) != b(n)) return false;
  }
  return true;
}

/// theta_chi straight from the defining cases.
inline std::pair<Index, int> theta(const Fn& chi, Index n, int i) {
  if (i == chi(n)) return {n + 1, 1 - chi(n + 1)};
  return {n - 1, chi(n - 1)};
}

// ---------------------------------------------------------------------------
// Finite instances as label maps.

using Copy = std::tuple<int, std::string, int>;  // side (0 = X, 1 = Y), label, bit

struct LabelInstance {
  std::vector<std::string> xs;
  std::vector<std::string> ys;
  std::map<Copy, Copy> theta;  // both directions

  Copy phi(const Copy& c) const { return {std::get<0>(c), std::get<1>(c), 1 - std::get<2>(c)}; }
  Copy sigma(const Copy& c) const { return phi(theta.at(c)); }
};

inline LabelInstance label_instance(const std::vector<std::string>& xs,
                                    const std::vector<std::string>& ys,
                                    const std::vector<divide2::MapEntry>& map) {
  LabelInstance inst{xs, ys, {}};
  for (const auto& e : map) {
    Copy from{0, e.x, divide2::to_int(e.i)};
    Copy to{1, e.y, divide2::to_int(e.j)};
    inst.theta[from] = to;
    inst.theta[to] = from;
  }
  return inst;
}

/// The canonical-orientation matching computed by walking label maps: for each
/// theta/phi cycle, take the sigma-orbit through the least copy (tuple order
/// is side, label, bit) and pair each X element with the Y element after it.
inline std::map<std::string, std::string> canonical_matching(const LabelInstance& inst) {
  std::set<Copy> all;
  for (const auto& [from, to] : inst.theta) all.insert(from);
  std::set<Copy> done;
  std::map<std::string, std::string> out;
  for (const Copy& start : all) {  // ascending
    if (done.count(start)) continue;
    std::vector<Copy> orbit;
    Copy c = start;
    do {
      orbit.push_back(c);
      done.insert(c);
      done.insert(inst.phi(c));
      c = inst.sigma(c);
    } while (c != start);
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      if (std::get<0>(orbit[k]) != 0) continue;
      const Copy& next = orbit[(k + 1) % orbit.size()];
      out[std::get<1>(orbit[k])] = std::get<1>(next);
    }
  }
  return out;
}

/// All bijections X -> Y, by permutation enumeration.
inline std::vector<std::map<std::string, std::string>> all_bijections(std::vector<std::string> xs,
                                                                      std::vector<std::string> ys) {
  std::sort(ys.begin(), ys.end());
  std::vector<std::map<std::string, std::string>> out;
  if (xs.size() != ys.size()) return out;
  do {
    std::map<std::string, std::string> m;
    for (std::size_t k = 0; k < xs.size(); ++k) m[xs[k]] = ys[k];
    out.push_back(std::move(m));
  } while (std::next_permutation(ys.begin(), ys.end()));
  return out;
}

/// Uniformly random bijection X x 2 -> Y x 2 on the labels x0.., y0...
inline std::vector<divide2::MapEntry> random_map(std::mt19937_64& rng,
                                                 const std::vector<std::string>& xs,
                                                 const std::vector<std::string>& ys) {
  std::vector<std::pair<std::string, Bit>> targets;
  for (const auto& y : ys) {
    targets.emplace_back(y, Bit::zero);
    targets.emplace_back(y, Bit::one);
  }
  std::shuffle(targets.begin(), targets.end(), rng);
  std::vector<divide2::MapEntry> map;
  std::size_t k = 0;
  for (const auto& x : xs) {
    for (Bit i : {Bit::zero, Bit::one}) {
      map.push_back({x, i, targets[k].first, targets[k].second});
      ++k;
    }
  }
  return map;
}

inline std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

}  // namespace oracle

#endif  // DIVIDE2_TESTS_ORACLES_HPP_
