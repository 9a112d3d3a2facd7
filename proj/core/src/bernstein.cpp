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

#include "divide2/bernstein.hpp"

#include <algorithm>
#include <stdexcept>

#include "divide2/error.hpp"

namespace divide2 {

namespace {

constexpr FinInstance::CopyId kUnset = ~FinInstance::CopyId{0};

void sort_unique(std::vector<std::string>& labels, const char* set_name) {
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) {
    throw InputError(std::string(set_name) + " contains duplicate label '" + *dup + "'");
  }
}

std::size_t index_in(const std::vector<std::string>& sorted, std::string_view label) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), label);
  if (it == sorted.end() || *it != label) return sorted.size();
  return static_cast<std::size_t>(it - sorted.begin());
}

std::string describe(std::string_view label, Bit b) {
  return "('" + std::string(label) + "', " + to_string(b) + ")";
}

}  // namespace

FinInstance::FinInstance(std::vector<std::string> xs, std::vector<std::string> ys,
                         std::span<const MapEntry> map)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  sort_unique(xs_, "X");
  sort_unique(ys_, "Y");
  if (xs_.size() != ys_.size()) {
    throw InputError("|X| = " + std::to_string(xs_.size()) + " but |Y| = " +
                     std::to_string(ys_.size()) + "; no bijection X x 2 -> Y x 2 exists");
  }
  const std::size_t copies = 2 * xs_.size();
  if (map.size() != copies) {
    throw InputError("map has " + std::to_string(map.size()) + " entries, expected " +
                     std::to_string(copies) + " (one per element of X x 2)");
  }
  forward_.assign(copies, kUnset);
  backward_.assign(copies, kUnset);
  for (std::size_t k = 0; k < map.size(); ++k) {
    const MapEntry& e = map[k];
    const std::string where = "map entry " + std::to_string(k) + ": ";
    std::size_t xi = index_in(xs_, e.x);
    if (xi == xs_.size()) throw InputError(where + "'" + e.x + "' is not in X");
    std::size_t yi = index_in(ys_, e.y);
    if (yi == ys_.size()) throw InputError(where + "'" + e.y + "' is not in Y");
    auto from = static_cast<CopyId>(2 * xi + to_int(e.i));
    auto to = static_cast<CopyId>(2 * yi + to_int(e.j));
    if (forward_[from] != kUnset) {
      throw InputError(where + describe(e.x, e.i) + " is mapped twice");
    }
    if (backward_[to] != kUnset) {
      throw InputError(where + describe(e.y, e.j) + " is hit twice; map is not injective");
    }
    forward_[from] = to;
    backward_[to] = from;
  }
}

FinInstance::CopyId FinInstance::theta(CopyId c) const {
  const auto half = static_cast<CopyId>(2 * xs_.size());
  return c < half ? half + forward_[c] : backward_[c - half];
}

CopyElem FinInstance::elem(CopyId c) const {
  const std::size_t half = 2 * xs_.size();
  Bit b = bit_of(c & 1U);
  if (c < half) return {Side::x, xs_[c / 2], b};
  return {Side::y, ys_[(c - half) / 2], b};
}

std::optional<std::size_t> FinInstance::find(Side side, std::string_view label) const {
  const auto& labels = side == Side::x ? xs_ : ys_;
  std::size_t k = index_in(labels, label);
  if (k == labels.size()) return std::nullopt;
  return k;
}

FinInstance::CopyId FinInstance::id(const CopyElem& z) const {
  auto k = find(z.side, z.label);
  if (!k) {
    throw InputError("'" + z.label + "' is not in " + (z.side == Side::x ? "X" : "Y"));
  }
  std::size_t base = z.side == Side::x ? 0 : 2 * xs_.size();
  return static_cast<CopyId>(base + 2 * *k + to_int(z.i));
}

std::vector<MapEntry> FinInstance::entries() const {
  std::vector<MapEntry> out;
  out.reserve(forward_.size());
  for (CopyId c = 0; c < forward_.size(); ++c) {
    CopyElem from = elem(c);
    CopyElem to = elem(theta(c));
    out.push_back({from.label, from.i, to.label, to.i});
  }
  return out;
}

CopyElem theta_perm(const FinInstance& inst, const CopyElem& z) {
  return inst.elem(inst.theta(inst.id(z)));
}

CopyElem phi_perm(const CopyElem& z) { return {z.side, z.label, flip(z.i)}; }

namespace {

std::vector<FinInstance::CopyId> orbit_from(const FinInstance& inst, FinInstance::CopyId start) {
  std::vector<FinInstance::CopyId> orbit;
  FinInstance::CopyId c = start;
  do {
    orbit.push_back(c);
    c = inst.sigma(c);
  } while (c != start);
  return orbit;
}

}  // namespace

std::vector<Bit> chi_trace(const FinInstance& inst, const CopyElem& z, Index lo, Index hi) {
  if (lo > hi) throw InputError("chi_trace: lo must not exceed hi");
  auto orbit = orbit_from(inst, inst.id(z));
  const auto period = static_cast<Index>(orbit.size());
  std::vector<Bit> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index n = lo; n <= hi; ++n) {
    Index k = ((n % period) + period) % period;
    out.push_back(bit_of(orbit[static_cast<std::size_t>(k)] & 1U));
  }
  return out;
}

std::vector<std::vector<CopyElem>> sigma_orbits(const FinInstance& inst) {
  std::vector<bool> seen(inst.copy_count(), false);
  std::vector<std::vector<CopyElem>> orbits;
  for (FinInstance::CopyId c = 0; c < inst.copy_count(); ++c) {
    if (seen[c]) continue;
    std::vector<CopyElem> orbit;
    for (auto id : orbit_from(inst, c)) {
      seen[id] = true;
      orbit.push_back(inst.elem(id));
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Matching divide_by_two(const FinInstance& inst) {
  const std::size_t n = inst.size();
  const auto half = static_cast<FinInstance::CopyId>(2 * n);
  std::vector<bool> seen(inst.copy_count(), false);
  std::vector<std::size_t> target(n, n);

  // Ascending ids: the first unseen copy of a cycle is its least copy.
  for (FinInstance::CopyId c = 0; c < inst.copy_count(); ++c) {
    if (seen[c]) continue;
    auto orbit = orbit_from(inst, c);
    for (auto id : orbit) {
      seen[id] = true;
      seen[FinInstance::phi(id)] = true;  // the mirror orbit
    }
    if (orbit.size() % 2 != 0 || orbit.front() >= half) {
      throw std::logic_error("divide_by_two: sigma-orbit does not alternate X, Y");
    }
    for (std::size_t k = 0; k < orbit.size(); k += 2) {
      auto x = orbit[k];
      auto y = orbit[k + 1];
      if (x >= half || y < half) {
        throw std::logic_error("divide_by_two: sigma-orbit does not alternate X, Y");
      }
      target[x / 2] = (y - half) / 2;
    }
  }

  Matching m;
  m.pairs.reserve(n);
  for (std::size_t k = 0; k < n; ++k) m.pairs.emplace_back(inst.xs()[k], inst.ys()[target[k]]);
  return m;
}

bool verify_matching(const FinInstance& inst, const Matching& m) {
  const std::size_t n = inst.size();
  if (m.pairs.size() != n) return false;
  std::vector<bool> used_x(n, false);
  std::vector<bool> used_y(n, false);
  for (const auto& [x, y] : m.pairs) {
    auto xi = inst.find(Side::x, x);
    auto yi = inst.find(Side::y, y);
    if (!xi || !yi || used_x[*xi] || used_y[*yi]) return false;
    used_x[*xi] = true;
    used_y[*yi] = true;
  }
  return true;
}

FinInstance theta_cyclic_instance(std::span<const Bit> chi) {
  if (chi.empty() || chi.size() % 2 != 0) {
    throw InputError("theta_cyclic_instance: table length must be even and positive, got " +
                     std::to_string(chi.size()));
  }
  const auto len = static_cast<Index>(chi.size());
  auto at = [&](Index k) { return chi[static_cast<std::size_t>(((k % len) + len) % len)]; };
  auto wrap = [&](Index k) { return ((k % len) + len) % len; };

  std::vector<std::string> xs;
  std::vector<std::string> ys;
  std::vector<MapEntry> map;
  for (Index k = 0; k < len; k += 2) {
    xs.push_back(std::to_string(k));
    ys.push_back(std::to_string(k + 1));
    for (Bit i : {Bit::zero, Bit::one}) {
      if (i == at(k)) {
        map.push_back({std::to_string(k), i, std::to_string(wrap(k + 1)), flip(at(k + 1))});
      } else {
        map.push_back({std::to_string(k), i, std::to_string(wrap(k - 1)), at(k - 1)});
      }
    }
  }
  return FinInstance(std::move(xs), std::move(ys), map);
}

}  // namespace divide2
