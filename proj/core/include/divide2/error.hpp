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

#ifndef DIVIDE2_ERROR_HPP_
#define DIVIDE2_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace divide2 {

/// Raised for malformed input and violated preconditions. The CLI maps it to
/// exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of a property check: either the property holds, or a witness of
/// the violation is attached.
template <class Witness>
class Verdict {
 public:
  static Verdict pass() { return Verdict(); }
  static Verdict fail(Witness w) { return Verdict(std::move(w)); }

  bool holds() const { return !witness_.has_value(); }
  explicit operator bool() const { return holds(); }

  const Witness& witness() const { return witness_.value(); }
  const std::optional<Witness>& maybe_witness() const { return witness_; }

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  Verdict() = default;
  explicit Verdict(Witness w) : witness_(std::move(w)) {}

  std::optional<Witness> witness_;
};

}  // namespace divide2

#endif  // DIVIDE2_ERROR_HPP_
