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

#ifndef DIVIDE2_BERNSTEIN_HPP_
#define DIVIDE2_BERNSTEIN_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divide2/sequences.hpp"

namespace divide2 {

enum class Side : std::uint8_t { x, y };

/// An element of (X x 2) + (Y x 2). The defaulted ordering (side, then label,
/// then bit) is the total order used to orient cycles.
struct CopyElem {
  Side side;
  std::string label;
  Bit i;

  friend auto operator<=>(const CopyElem&, const CopyElem&) = default;
};

/// One entry (x, i) |-> (y, j) of the bijection X x 2 -> Y x 2.
struct MapEntry {
  std::string x;
  Bit i;
  std::string y;
  Bit j;
};

/// A finite division problem: label sets X and Y with an explicit bijection
/// X x 2 -> Y x 2. Validated on construction; labels are kept sorted, so two
/// instances that differ only in the order of their inputs are identical.
///
/// Copies are numbered densely in the canonical order: (x_k, b) is 2k + b and
/// (y_k, b) is 2|X| + 2k + b.
class FinInstance {
 public:
  using CopyId = std::uint32_t;

  FinInstance(std::vector<std::string> xs, std::vector<std::string> ys,
              std::span<const MapEntry> map);

  const std::vector<std::string>& xs() const { return xs_; }
  const std::vector<std::string>& ys() const { return ys_; }
  std::size_t size() const { return xs_.size(); }
  std::size_t copy_count() const { return 4 * xs_.size(); }

  /// The order-2 permutation of all copies induced by the bijection.
  CopyId theta(CopyId c) const;
  static CopyId phi(CopyId c) { return c ^ 1U; }
  CopyId sigma(CopyId c) const { return phi(theta(c)); }
  CopyId sigma_inv(CopyId c) const { return theta(phi(c)); }

  CopyElem elem(CopyId c) const;
  /// Throws InputError if the label is not on the given side.
  CopyId id(const CopyElem& z) const;
  std::optional<std::size_t> find(Side side, std::string_view label) const;

  /// The entries of the bijection in canonical order.
  std::vector<MapEntry> entries() const;

 private:
  std::vector<std::string> xs_;
  std::vector<std::string> ys_;
  // x copy 2k+b -> y copy (relative to the Y block), and back.
  std::vector<CopyId> forward_;
  std::vector<CopyId> backward_;
};

/// A bijection X -> Y as (x, y) pairs. divide_by_two emits them sorted by x.
struct Matching {
  std::vector<std::pair<std::string, std::string>> pairs;

  friend bool operator==(const Matching&, const Matching&) = default;
};

CopyElem theta_perm(const FinInstance& inst, const CopyElem& z);
CopyElem phi_perm(const CopyElem& z);

/// chi_z(n) for n = lo..hi: the copy bit of (phi theta)^n z. Negative n use
/// the inverse permutation theta phi.
std::vector<Bit> chi_trace(const FinInstance& inst, const CopyElem& z, Index lo, Index hi);

/// Orbit decomposition of sigma = phi theta, each orbit listed from its least
/// element in the direction of sigma; orbits ordered by least element.
std::vector<std::vector<CopyElem>> sigma_orbits(const FinInstance& inst);

/// Divides the bijection X x 2 -> Y x 2 by two.
///
/// The graph on copies whose edges are theta and phi is a disjoint union of
/// even cycles. Each such cycle carries two sigma-orbits running in opposite
/// directions, exchanged by phi, and along either orbit the underlying
/// elements alternate X, Y, X, Y, ... We take the orbit through the least copy
/// of the cycle, walk it from that copy, and match each X element to the Y
/// element that follows it.
Matching divide_by_two(const FinInstance& inst);

/// True iff m is a total bijection from inst.xs() onto inst.ys().
bool verify_matching(const FinInstance& inst, const Matching& m);

/// The instance obtained from theta_chi on Z/2MZ for chi given by a table of
/// length 2M: X = even residues, Y = odd residues, labelled by their decimal
/// value. Throws InputError on odd or empty tables.
FinInstance theta_cyclic_instance(std::span<const Bit> chi);

}  // namespace divide2

#endif  // DIVIDE2_BERNSTEIN_HPP_
