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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divide2/bernstein.hpp"
#include "divide2/counterexample.hpp"
#include "divide2/dihedral.hpp"
#include "divide2/error.hpp"
#include "divide2/io.hpp"
#include "divide2/sequences.hpp"
#include "divide2/theta.hpp"

namespace divide2::cli {

namespace {

using io::Json;

constexpr const char* kFormats = R"(Formats:
  chi       nbar:<k> | -inf | +inf | {"left":b,"start":s,"core":[bits],"right":b}
  word      letters t, T (= t^-1), r; "rt" means t acts first, then r
  instance  {"X":["a","b"],"Y":["c","d"],"map":[[["a",0],["c",0]], ...]}
  matching  {"pairs":[["a","c"], ...]}
  rule      {"w":0,"d":1,"table":{"allzero":1,"allone":-1}}  (keys allzero|allone|cut:<p>)

Exit codes: 0 ok, 1 a verification contradicted the non-existence theorem,
2 malformed input.)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

FinInstance load_instance(const std::string& path) {
  return io::instance_from_json(io::parse_json(read_file(path), path));
}

std::string parity_word(Index n) { return n % 2 == 0 ? "even" : "odd"; }

std::string bits_string(const std::vector<Bit>& bits) {
  std::string out;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (k != 0) out += ' ';
    out += to_string(bits[k]);
  }
  return out;
}

// "[X:|Y:]label,bit" optionally followed by ",lo,hi"; split from the right so
// labels may contain commas.
struct TraceRequest {
  CopyElem z;
  Index lo = 0;
  Index hi = 0;
};

std::vector<std::string> split_right(const std::string& text, std::size_t fields) {
  std::vector<std::string> parts;
  std::string rest = text;
  while (parts.size() + 1 < fields) {
    auto comma = rest.rfind(',');
    if (comma == std::string::npos) break;
    parts.push_back(rest.substr(comma + 1));
    rest.resize(comma);
  }
  parts.push_back(rest);
  std::reverse(parts.begin(), parts.end());
  return parts;
}

Index parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError(what + ": expected an integer, got '" + text + "'");
}

CopyElem resolve_copy(const FinInstance& inst, std::string label, const std::string& bit_text) {
  Bit b = bit_from_int(parse_int(bit_text, "copy bit"));
  std::optional<Side> side;
  if (label.rfind("X:", 0) == 0 || label.rfind("Y:", 0) == 0) {
    side = label[0] == 'X' ? Side::x : Side::y;
    label = label.substr(2);
  }
  if (!side) {
    bool in_x = inst.find(Side::x, label).has_value();
    bool in_y = inst.find(Side::y, label).has_value();
    if (in_x && in_y) {
      throw InputError("label '" + label + "' is in both X and Y; prefix it with X: or Y:");
    }
    if (!in_x && !in_y) throw InputError("label '" + label + "' is in neither X nor Y");
    side = in_x ? Side::x : Side::y;
  }
  CopyElem z{*side, label, b};
  inst.id(z);  // validates
  return z;
}

TraceRequest parse_trace(const FinInstance& inst, const std::string& text) {
  auto parts = split_right(text, 4);
  if (parts.size() != 4) throw InputError("--trace expects label,bit,lo,hi; got '" + text + "'");
  TraceRequest req{resolve_copy(inst, parts[0], parts[1]), parse_int(parts[2], "trace lo"),
                   parse_int(parts[3], "trace hi")};
  if (req.lo > req.hi) throw InputError("trace: lo must not exceed hi");
  return req;
}

std::string copy_name(const CopyElem& z) {
  return std::string(z.side == Side::x ? "X:" : "Y:") + z.label + "," + to_string(z.i);
}

Json trace_json(const TraceRequest& req, const std::vector<Bit>& bits) {
  Json values = Json::array();
  for (Bit b : bits) values.push_back(to_int(b));
  return Json{{"z", copy_name(req.z)}, {"lo", req.lo}, {"hi", req.hi}, {"chi", values}};
}

void print_trace(std::ostream& out, const TraceRequest& req, const std::vector<Bit>& bits) {
  out << "chi_(" << copy_name(req.z) << ")[" << req.lo << ".." << req.hi
      << "] = " << bits_string(bits) << "\n";
}

// --------------------------------------------------------------------------

struct DivideArgs {
  std::string in;
  std::string out;
  std::string trace;
};

int cmd_divide(const DivideArgs& args, bool json, std::ostream& out) {
  FinInstance inst = load_instance(args.in);
  std::optional<TraceRequest> trace;
  if (!args.trace.empty()) trace = parse_trace(inst, args.trace);

  Matching m = divide_by_two(inst);
  Json mj = io::to_json(m);
  if (!args.out.empty()) write_file(args.out, mj.dump(2) + "\n");

  std::vector<Bit> bits;
  if (trace) bits = chi_trace(inst, trace->z, trace->lo, trace->hi);

  if (json) {
    Json result = mj;
    if (trace) result["trace"] = trace_json(*trace, bits);
    out << result.dump(2) << "\n";
  } else {
    for (const auto& [x, y] : m.pairs) out << x << " -> " << y << "\n";
    if (trace) print_trace(out, *trace, bits);
  }
  return kExitOk;
}

struct TraceArgs {
  std::string in;
  std::string z;
  Index lo = 0;
  Index hi = 0;
};

int cmd_trace(const TraceArgs& args, bool json, std::ostream& out) {
  FinInstance inst = load_instance(args.in);
  auto parts = split_right(args.z, 2);
  if (parts.size() != 2) throw InputError("--z expects label,bit; got '" + args.z + "'");
  TraceRequest req{resolve_copy(inst, parts[0], parts[1]), args.lo, args.hi};
  if (req.lo > req.hi) throw InputError("trace: lo must not exceed hi");
  auto bits = chi_trace(inst, req.z, req.lo, req.hi);
  if (json) {
    out << trace_json(req, bits).dump(2) << "\n";
  } else {
    print_trace(out, req, bits);
  }
  return kExitOk;
}

struct ThetaArgs {
  std::string chi;
  Index n = 0;
  int i = 0;
};

int cmd_theta(const ThetaArgs& args, bool json, std::ostream& out) {
  BiSeq chi = io::parse_chi(args.chi);
  ParityPoint p(args.n, bit_from_int(args.i));
  ThetaResult result = theta(chi, p);
  std::optional<Index> modulus;
  if (p.parity() == Parity::even) modulus = theta_window(chi, p);

  if (json) {
    Json j{{"chi", io::to_json(chi)},
           {"input", Json::array({p.n(), to_int(p.i())})},
           {"image", Json::array({result.point.n(), to_int(result.point.i())})},
           {"window", result.window}};
    if (modulus) j["modulus"] = *modulus;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << to_string(result.point) << "\n";
  out << "window: chi at {" << result.window[0] << ", " << result.window[1] << ", "
      << result.window[2] << "}";
  if (modulus) out << "; modulus N = " << *modulus;
  out << "\n";
  return kExitOk;
}

struct ActArgs {
  std::string word;
  std::string target;
};

int cmd_act(const ActArgs& args, bool json, std::ostream& out) {
  DihedralElt g = parse_word(args.word);
  Json j{{"g", to_string(g)}};
  std::string human;
  const std::string& x = args.target;

  if (x.empty()) {
    human = to_string(g);
  } else if (x.front() == '{') {
    BiSeq result = act_seq(g, io::parse_chi(x));
    j["result"] = io::to_json(result);
    human = io::to_json(result).dump();
  } else if (x == "-inf" || x == "+inf" || x.rfind("nbar:", 0) == 0) {
    ZInfPoint result = act_zinf(g, io::parse_zinf(x));
    j["result"] = io::to_json(result);
    human = to_string(result);
  } else {
    Index result = act_int(g, parse_int(x, "act target"));
    j["result"] = result;
    human = std::to_string(result);
  }
  out << (json ? j.dump(2) : human) << "\n";
  return kExitOk;
}

std::string parity_line(const ParityCounts& c) {
  return "evens=" + std::to_string(c.evens) + " (" + parity_word(c.evens) +
         "), odds=" + std::to_string(c.odds) + " (" + parity_word(c.odds) + ")";
}

bool parity_as_predicted(const ParityCounts& c) { return c.evens % 2 != 0 && c.odds % 2 == 0; }

int cmd_verify_parity(Index k, Index N, bool json, std::ostream& out) {
  ParityCounts c = parity_counts({k, N});
  const bool ok = parity_as_predicted(c);
  if (json) {
    out << Json{{"k", k}, {"N", N}, {"evens", c.evens}, {"odds", c.odds}, {"contradiction", ok}}
               .dump(2)
        << "\n";
  } else {
    out << parity_line(c) << ": " << (ok ? "contradiction confirmed" : "UNEXPECTED parities")
        << "\n";
  }
  return ok ? kExitOk : kExitContradiction;
}

int cmd_verify_lemma(const std::string& path, bool json, std::ostream& out) {
  LocalRule rule = io::rule_from_json(io::parse_json(read_file(path), path));
  TailOutcome tail = eventually_linear(rule);
  if (auto* w = std::get_if<ReflectionWitness>(&tail)) {
    throw InputError("rule is not r-equivariant: table[" + to_string(w->pattern) +
                     "] = " + std::to_string(w->value) + " but table[" +
                     to_string(w->pattern.reflect_complement()) +
                     "] = " + std::to_string(w->partner_value));
  }

  Json j{{"rule", io::to_json(rule)}, {"r_equivariant", true}};
  std::ostringstream human;
  human << "rule: " << to_string(rule) << "\n";
  human << "r-equivariance: holds\n";
  int code = kExitOk;

  if (auto* v = std::get_if<TailViolation>(&tail)) {
    j["tail_violation"] = Json{{"n", v->n}, {"expected", v->expected}, {"actual", v->actual}};
    human << "eventual linearity: VIOLATED at n=" << v->n << " (expected " << v->expected
          << ", got " << v->actual << ")\n";
    code = kExitContradiction;
  } else {
    const auto& lt = std::get<LinearTail>(tail);
    ParityCounts c = parity_counts(lt);
    j["tail"] = Json{{"k", lt.k}, {"N", lt.N}};
    j["parity"] = Json{{"evens", c.evens}, {"odds", c.odds}, {"contradiction", parity_as_predicted(c)}};
    human << "eventual linearity: k=" << lt.k << ", N=" << lt.N
          << "; phi_nbar:0(n) = n + k for n > N and n - k for n < -N, tails verified\n";
    human << "parity count: " << parity_line(c) << "\n";
    if (!parity_as_predicted(c)) code = kExitContradiction;
  }

  auto bij = bijectivity_check(rule);
  if (bij) {
    j["bijective"] = true;
    human << "bijectivity: every probed phi_chi is a bijection (UNEXPECTED)\n";
    code = kExitContradiction;
  } else {
    j["bijective"] = false;
    j["witness"] = io::to_json(bij.witness());
    j["witness_rechecked"] = recheck(rule, bij.witness());
    human << "bijectivity: fails, " << to_string(bij.witness()) << "\n";
  }
  human << "verdict: "
        << (code == kExitOk ? "consistent with the non-existence theorem"
                            : "CONTRADICTS the non-existence theorem")
        << "\n";
  out << (json ? j.dump(2) + "\n" : human.str());
  return code;
}

struct SearchArgs {
  int w = 0;
  Index d = 1;
  unsigned jobs = 1;
  bool recheck = false;
  bool witnesses = false;
};

int cmd_verify_search(const SearchArgs& args, bool json, std::ostream& out) {
  SearchReport report = exhaustive_search(args.w, args.d, {args.jobs, args.recheck});
  const bool ok = report.survivors.empty() && report.recheck_failures == 0;
  if (json) {
    Json j = io::to_json(report);
    if (!args.witnesses) j.erase("rejections");
    j["scope"] = "uniform window: one radius w for every chi";
    if (args.recheck) {
      j["rechecked"] = report.rechecked;
      j["recheck_failures"] = report.recheck_failures;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "search: w=" << report.w << " d=" << report.d << " (window radius " << report.w
        << " around n, odd offsets |k| <= " << report.d << ")\n";
    out << "scope: uniform window rules only (one radius w for every chi)\n";
    out << "candidates: " << report.candidates << "\n";
    out << "not r-equivariant: " << report.not_equivariant << "\n";
    out << "r-equivariant: " << report.equivariant << "\n";
    out << "  rejected by collision: " << report.collisions << "\n";
    out << "  rejected by gap: " << report.gaps << "\n";
    if (args.recheck) {
      out << "witnesses rechecked: " << report.rechecked << " (" << report.recheck_failures
          << " failed)\n";
    }
    out << "survivors: " << report.survivors.size() << "\n";
    for (const auto& r : report.survivors) out << "  " << to_string(r) << "\n";
    if (args.witnesses) {
      for (const auto& r : report.rejections) {
        out << "  " << to_string(r.rule) << ": " << to_string(r.witness) << "\n";
      }
    }
    out << "verdict: "
        << (ok ? "no continuous equivariant family in this class"
               : "SURVIVOR FOUND, contradicts the non-existence theorem")
        << "\n";
  }
  return ok ? kExitOk : kExitContradiction;
}

int cmd_verify_matching(const std::string& in, const std::string& matching, bool json,
                        std::ostream& out) {
  FinInstance inst = load_instance(in);
  Matching m = io::matching_from_json(io::parse_json(read_file(matching), matching));
  const bool ok = verify_matching(inst, m);
  if (json) {
    out << Json{{"bijection", ok}}.dump(2) << "\n";
  } else {
    out << (ok ? "matching is a bijection X -> Y" : "matching is NOT a bijection X -> Y") << "\n";
  }
  return ok ? kExitOk : kExitContradiction;
}

int cmd_verify_naive(const std::string& shift, bool json, std::ostream& out) {
  NaiveShift s = NaiveShift::plus_one;
  if (shift == "minus") {
    s = NaiveShift::minus_one;
  } else if (shift != "plus") {
    throw InputError("--shift must be plus or minus");
  }
  auto w = naive_family_witness(s);
  const bool confirmed = recheck(naive_family(s), w);
  if (json) {
    Json j = io::to_json(w);
    j["rechecked"] = confirmed;
    out << j.dump(2) << "\n";
  } else {
    out << "phi_chi(n) = n " << (s == NaiveShift::plus_one ? "+" : "-") << " 1 is not equivariant: "
        << "g=" << to_string(w.g) << ", chi=" << to_string(w.chi) << ", n=" << w.n
        << ": phi_{g.chi}(g.n) = " << w.lhs << " but g.phi_chi(n) = " << w.rhs << "\n";
  }
  return confirmed ? kExitOk : kExitContradiction;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"divide2: dividing by two, equivariance and continuity checks", "divide2"};
  app.footer(kFormats);
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit machine-readable JSON");

  DivideArgs divide_args;
  auto* divide = app.add_subcommand("divide", "Divide a finite bijection X x 2 -> Y x 2 by two");
  divide->add_option("--in", divide_args.in, "Instance JSON file")->required();
  divide->add_option("--out", divide_args.out, "Write the matching JSON here");
  divide->add_option("--trace", divide_args.trace, "Also print chi_z: label,bit,lo,hi");

  TraceArgs trace_args;
  auto* trace_cmd = app.add_subcommand("trace", "Print chi_z(n) = bit of (phi theta)^n z");
  trace_cmd->add_option("--in", trace_args.in, "Instance JSON file")->required();
  trace_cmd->add_option("--z", trace_args.z, "Start copy as [X:|Y:]label,bit")->required();
  trace_cmd->add_option("--lo", trace_args.lo, "First n")->required();
  trace_cmd->add_option("--hi", trace_args.hi, "Last n")->required();

  ThetaArgs theta_args;
  auto* theta_cmd = app.add_subcommand("theta", "Evaluate theta_chi(n, i)");
  theta_cmd->add_option("--chi", theta_args.chi, "Sequence chi")->required();
  theta_cmd->add_option("--n", theta_args.n, "Integer n (even; odd evaluates the inverse)")
      ->required();
  theta_cmd->add_option("--i", theta_args.i, "Copy bit")->required()->check(CLI::Range(0, 1));

  ActArgs act_args;
  auto* act = app.add_subcommand("act", "Act with a dihedral word on an integer, point or sequence");
  act->add_option("word", act_args.word, "Word over t, T, r")->required();
  act->add_option("target", act_args.target, "Integer, nbar:<k>, -inf, +inf or sequence JSON");

  auto* verify = app.add_subcommand("verify", "Mechanical checks of the non-existence argument");
  verify->require_subcommand(1);

  std::string rule_path;
  auto* lemma = verify->add_subcommand("lemma", "Eventual linearity, parity count and bijectivity for one rule");
  lemma->add_option("--rule", rule_path, "Rule JSON file")->required();

  Index parity_k = 0;
  Index parity_n = 0;
  auto* parity = verify->add_subcommand("parity", "Count the sets a bijection phi_0bar must match");
  parity->add_option("--k", parity_k, "Odd tail offset")->required();
  parity->add_option("--N", parity_n, "Even tail radius, N > |k|")->required();

  SearchArgs search_args;
  auto* search = verify->add_subcommand("search", "Exhaustive search over local rules");
  search->add_option("--w", search_args.w, "Window radius (0..4)")->required();
  search->add_option("--d", search_args.d, "Offset bound (1..9)")->required();
  search->add_option("--jobs", search_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--recheck", search_args.recheck, "Re-verify every witness");
  search->add_flag("--witnesses", search_args.witnesses, "List every rejected equivariant rule");

  std::string matching_in;
  std::string matching_path;
  auto* matching = verify->add_subcommand("matching", "Check that a matching is a bijection X -> Y");
  matching->add_option("--in", matching_in, "Instance JSON file")->required();
  matching->add_option("--matching", matching_path, "Matching JSON file")->required();

  std::string naive_shift = "plus";
  auto* naive = verify->add_subcommand("naive", "Equivariance witness for phi_chi(n) = n +/- 1");
  naive->add_option("--shift", naive_shift, "plus or minus");

  try {
    // `act` takes positionals only; keep "-inf" from being read as a flag.
    std::vector<std::string> argv(args.begin(), args.end());
    auto act_pos = std::find(argv.begin(), argv.end(), "act");
    if (act_pos != argv.end() && std::find(act_pos, argv.end(), "--") == argv.end()) {
      auto neg = std::find(act_pos, argv.end(), "-inf");
      if (neg != argv.end()) argv.insert(neg, "--");
    }
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "divide2: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (divide->parsed()) return cmd_divide(divide_args, json, out);
    if (trace_cmd->parsed()) return cmd_trace(trace_args, json, out);
    if (theta_cmd->parsed()) return cmd_theta(theta_args, json, out);
    if (act->parsed()) return cmd_act(act_args, json, out);
    if (lemma->parsed()) return cmd_verify_lemma(rule_path, json, out);
    if (parity->parsed()) return cmd_verify_parity(parity_k, parity_n, json, out);
    if (search->parsed()) return cmd_verify_search(search_args, json, out);
    if (matching->parsed()) return cmd_verify_matching(matching_in, matching_path, json, out);
    if (naive->parsed()) return cmd_verify_naive(naive_shift, json, out);
  } catch (const InputError& e) {
    err << "divide2: " << e.what() << "\n";
    return kExitBadInput;
  }
  err << "divide2: no command given\n";
  return kExitBadInput;
}

}  // namespace divide2::cli
