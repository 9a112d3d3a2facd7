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

#ifndef DIVIDE2_IO_HPP_
#define DIVIDE2_IO_HPP_

// JSON and text encodings shared by the CLI and by anything embedding the
// library. All decoders throw InputError with a path to the offending value.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "divide2/bernstein.hpp"
#include "divide2/counterexample.hpp"
#include "divide2/sequences.hpp"

namespace divide2::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors report "<source>:line:column".
Json parse_json(std::string_view text, std::string_view source);

// {"left":b, "start":s, "core":[bits], "right":b}
Json to_json(const BiSeq& seq);
BiSeq biseq_from_json(const Json& j);

// "-inf" | "+inf" | integer
Json to_json(ZInfPoint p);
ZInfPoint zinf_from_json(const Json& j);

/// "nbar:k", "-inf", "+inf", or a JSON BiSeq object.
BiSeq parse_chi(std::string_view text);
/// "nbar:k", "-inf", "+inf", or a bare integer k (meaning nbar:k).
ZInfPoint parse_zinf(std::string_view text);

// {"X": [...], "Y": [...], "map": [[["a",0],["c",0]], ...]}
Json to_json(const FinInstance& inst);
FinInstance instance_from_json(const Json& j);

// {"pairs": [["a","d"], ...]}
Json to_json(const Matching& m);
Matching matching_from_json(const Json& j);

// {"w":0, "d":1, "table":{"allzero":1, "allone":-1}}; "d" defaults to the
// largest |offset|, keys may be "allzero", "allone" or "cut:p".
Json to_json(const LocalRule& rule);
LocalRule rule_from_json(const Json& j);

Json to_json(const WindowPattern& p);
Json to_json(const ReflectionWitness& w);
Json to_json(const BijectivityWitness& w);
Json to_json(const FamilyEquivarianceWitness& w);
Json to_json(const SearchReport& report);

}  // namespace divide2::io

#endif  // DIVIDE2_IO_HPP_
