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

#include "divide2/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "divide2/dihedral.hpp"
#include "divide2/error.hpp"

namespace divide2::io {

namespace {

[[noreturn]] void fail(std::string_view path, const std::string& what) {
  throw InputError(std::string(path) + ": " + what);
}

const Json& field(const Json& j, const char* key, std::string_view path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

Index integer(const Json& j, std::string_view path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Index>();
}

Bit bit(const Json& j, std::string_view path) {
  if (!j.is_number_integer()) fail(path, "expected a bit (0 or 1)");
  auto v = j.get<long long>();
  if (v != 0 && v != 1) fail(path, "expected a bit (0 or 1), got " + std::to_string(v));
  return bit_of(v == 1);
}

std::string label(const Json& j, std::string_view path) {
  if (!j.is_string()) fail(path, "expected a string label");
  return j.get<std::string>();
}

std::vector<std::string> labels(const Json& j, std::string_view path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(label(j[k], std::string(path) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

bool parse_index(std::string_view text, Index& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return !text.empty() && ec == std::errc() && end == text.data() + text.size();
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": invalid JSON");
  }
}

Json to_json(const BiSeq& seq) {
  Json core = Json::array();
  for (Bit b : seq.core()) core.push_back(to_int(b));
  return Json{{"left", to_int(seq.left())},
              {"start", seq.start()},
              {"core", core},
              {"right", to_int(seq.right())}};
}

BiSeq biseq_from_json(const Json& j) {
  const Json& core_json = field(j, "core", "chi");
  if (!core_json.is_array()) fail("chi.core", "expected an array of bits");
  std::vector<Bit> core;
  for (std::size_t k = 0; k < core_json.size(); ++k) {
    core.push_back(bit(core_json[k], "chi.core[" + std::to_string(k) + "]"));
  }
  return BiSeq(bit(field(j, "left", "chi"), "chi.left"),
               integer(field(j, "start", "chi"), "chi.start"), std::move(core),
               bit(field(j, "right", "chi"), "chi.right"));
}

Json to_json(ZInfPoint p) {
  switch (p.kind()) {
    case ZInfPoint::Kind::minus_inf:
      return "-inf";
    case ZInfPoint::Kind::plus_inf:
      return "+inf";
    case ZInfPoint::Kind::finite:
      break;
  }
  return p.threshold();
}

ZInfPoint zinf_from_json(const Json& j) {
  if (j.is_number_integer()) return ZInfPoint::finite(j.get<Index>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "-inf") return ZInfPoint::minus_inf();
    if (s == "+inf") return ZInfPoint::plus_inf();
  }
  fail("point", "expected \"-inf\", \"+inf\" or an integer");
}

ZInfPoint parse_zinf(std::string_view text) {
  if (text == "-inf") return ZInfPoint::minus_inf();
  if (text == "+inf" || text == "inf") return ZInfPoint::plus_inf();
  if (text.substr(0, 5) == "nbar:") text.remove_prefix(5);
  Index n = 0;
  if (!parse_index(text, n)) {
    throw InputError("cannot read '" + std::string(text) +
                     "' as a point (expected nbar:<int>, -inf or +inf)");
  }
  return ZInfPoint::finite(n);
}

BiSeq parse_chi(std::string_view text) {
  if (!text.empty() && text.front() == '{') return biseq_from_json(parse_json(text, "chi"));
  if (text == "-inf" || text == "+inf" || text.substr(0, 5) == "nbar:") {
    return embed(parse_zinf(text));
  }
  throw InputError("cannot read chi from '" + std::string(text) +
                   "' (expected JSON, nbar:<int>, -inf or +inf)");
}

Json to_json(const FinInstance& inst) {
  Json map = Json::array();
  for (const auto& e : inst.entries()) {
    map.push_back(Json::array({Json::array({e.x, to_int(e.i)}), Json::array({e.y, to_int(e.j)})}));
  }
  return Json{{"X", inst.xs()}, {"Y", inst.ys()}, {"map", map}};
}

FinInstance instance_from_json(const Json& j) {
  auto xs = labels(field(j, "X", "instance"), "X");
  auto ys = labels(field(j, "Y", "instance"), "Y");
  const Json& map_json = field(j, "map", "instance");
  if (!map_json.is_array()) fail("map", "expected an array of [[x,i],[y,j]] entries");
  std::vector<MapEntry> map;
  for (std::size_t k = 0; k < map_json.size(); ++k) {
    const std::string at = "map[" + std::to_string(k) + "]";
    const Json& e = map_json[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_array() || e[0].size() != 2 ||
        !e[1].is_array() || e[1].size() != 2) {
      fail(at, "expected [[x, i], [y, j]]");
    }
    map.push_back({label(e[0][0], at + "[0][0]"), bit(e[0][1], at + "[0][1]"),
                   label(e[1][0], at + "[1][0]"), bit(e[1][1], at + "[1][1]")});
  }
  return FinInstance(std::move(xs), std::move(ys), map);
}

Json to_json(const Matching& m) {
  Json pairs = Json::array();
  for (const auto& [x, y] : m.pairs) pairs.push_back(Json::array({x, y}));
  return Json{{"pairs", pairs}};
}

Matching matching_from_json(const Json& j) {
  const Json& pairs = field(j, "pairs", "matching");
  if (!pairs.is_array()) fail("pairs", "expected an array of [x, y] pairs");
  Matching m;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const std::string at = "pairs[" + std::to_string(k) + "]";
    if (!pairs[k].is_array() || pairs[k].size() != 2) fail(at, "expected [x, y]");
    m.pairs.emplace_back(label(pairs[k][0], at + "[0]"), label(pairs[k][1], at + "[1]"));
  }
  return m;
}

Json to_json(const LocalRule& rule) {
  Json table = Json::object();
  for (std::size_t c = 0; c < rule.table().size(); ++c) {
    table[to_string(WindowPattern::from_index(rule.radius(), static_cast<int>(c)))] =
        rule.table()[c];
  }
  return Json{{"w", rule.radius()}, {"d", rule.bound()}, {"table", table}};
}

LocalRule rule_from_json(const Json& j) {
  const Index w = integer(field(j, "w", "rule"), "rule.w");
  if (w < 0 || w > 64) fail("rule.w", "radius must be in [0, 64]");
  const Json& table_json = field(j, "table", "rule");
  if (!table_json.is_object()) fail("rule.table", "expected an object keyed by pattern");

  const int radius = static_cast<int>(w);
  std::vector<std::optional<Index>> slots(static_cast<std::size_t>(WindowPattern::count(radius)));
  for (const auto& [key, value] : table_json.items()) {
    const std::string at = "rule.table[\"" + key + "\"]";
    WindowPattern p = [&] {
      try {
        return parse_pattern(radius, key);
      } catch (const InputError& e) {
        fail(at, e.what());
      }
    }();
    auto& slot = slots[static_cast<std::size_t>(p.index())];
    if (slot) fail(at, "pattern " + to_string(p) + " given twice");
    slot = integer(value, at);
  }

  std::vector<Index> table;
  Index widest = 1;
  for (std::size_t c = 0; c < slots.size(); ++c) {
    if (!slots[c]) {
      fail("rule.table", "missing pattern " +
                             to_string(WindowPattern::from_index(radius, static_cast<int>(c))));
    }
    table.push_back(*slots[c]);
    widest = std::max(widest, *slots[c] < 0 ? -*slots[c] : *slots[c]);
  }
  Index d = widest;
  if (j.contains("d")) d = integer(j["d"], "rule.d");
  return LocalRule(radius, d, std::move(table));
}

Json to_json(const WindowPattern& p) { return to_string(p); }

Json to_json(const ReflectionWitness& w) {
  return Json{{"pattern", to_json(w.pattern)},
              {"partner", to_json(w.pattern.reflect_complement())},
              {"value", w.value},
              {"partner_value", w.partner_value}};
}

Json to_json(const BijectivityWitness& w) {
  if (w.kind == BijectivityWitness::Kind::gap) {
    return Json{{"kind", "gap"}, {"chi", to_json(w.chi)}, {"missing", w.value}};
  }
  return Json{{"kind", "collision"},
              {"chi", to_json(w.chi)},
              {"preimages", Json::array({w.first, w.second})},
              {"image", w.value}};
}

Json to_json(const FamilyEquivarianceWitness& w) {
  return Json{{"g", to_string(w.g)}, {"chi", to_json(w.chi)}, {"n", w.n},
              {"lhs", w.lhs},         {"rhs", w.rhs}};
}

Json to_json(const SearchReport& report) {
  Json survivors = Json::array();
  for (const auto& r : report.survivors) survivors.push_back(to_json(r));
  Json rejections = Json::array();
  for (const auto& r : report.rejections) {
    rejections.push_back(Json{{"table", to_json(r.rule)["table"]}, {"witness", to_json(r.witness)}});
  }
  return Json{{"w", report.w},
              {"d", report.d},
              {"candidates", report.candidates},
              {"equivariant", report.equivariant},
              {"not_equivariant", report.not_equivariant},
              {"collisions", report.collisions},
              {"gaps", report.gaps},
              {"survivors", survivors},
              {"rejections", rejections}};
}

}  // namespace divide2::io
