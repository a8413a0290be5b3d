/* Copyright 2026 The OTN Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "otn/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "otn/arith.hpp"
#include "otn/oracle.hpp"
#include "otn/order.hpp"
#include "otn/sd.hpp"
#include "otn/syntax.hpp"
#include "otn/validate.hpp"

namespace otn {

namespace {

using nlohmann::json;

struct Globals {
  int big_n = 4;
  std::string format = "text";
  int threads = 1;

  bool json() const { return format == "json-lines"; }
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int cmd_check(const Globals& g, const std::string& text, std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  Ord t = parse_ord(text, u);
  auto r = check_ot(t);
  if (g.json()) {
    json checks = json::array();
    for (const Check& c : r->checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    emit(out, {{"term", print(t)},
               {"ok", r->ok},
               {"rule", rule_name(r->rule)},
               {"failure", r->failure()},
               {"checks", checks}});
  } else {
    out << (r->ok ? "ok" : "invalid") << " rule=" << rule_name(r->rule);
    if (!r->ok) out << " failed=\"" << r->failure() << '"';
    out << '\n';
    for (const Check& c : r->checks) {
      out << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.witness.empty()) out << "  [" << c.witness << ']';
      out << '\n';
    }
  }
  return r->ok ? 0 : 1;
}

int cmd_cmp(const Globals& g, const std::string& a, const std::string& b,
            std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  Ord s = parse_ord(a, u), t = parse_ord(b, u);
  Cmp c = cmp_ord(s, t);
  if (g.json()) {
    emit(out, {{"left", print(s)}, {"right", print(t)}, {"cmp", std::string(1, cmp_symbol(c))}});
  } else {
    out << cmp_symbol(c) << '\n';
  }
  return 0;
}

int cmd_kset(const Globals& g, const std::string& d, const std::string& a,
             std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  Ord delta = parse_ord(d, u), alpha = parse_ord(a, u);
  require_valid(delta);
  require_valid(alpha);
  KSet k = k_delta(delta, alpha);
  if (g.json()) {
    std::vector<Ord> sorted(k.begin(), k.end());
    sort_by_order(sorted);
    json elems = json::array();
    for (Ord x : sorted) elems.push_back(print(x));
    emit(out, {{"delta", print(delta)}, {"term", print(alpha)}, {"kset", elems}});
  } else {
    out << print(k) << '\n';
  }
  return 0;
}

int cmd_mvec(const Globals& g, const std::string& a, std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  Ord alpha = parse_ord(a, u);
  require_valid(alpha);
  auto m = m_vec(alpha);
  std::string text = m ? print(*m) : "undefined";
  if (g.json()) {
    emit(out, {{"term", print(alpha)}, {"mvec", text}});
  } else {
    out << text << '\n';
  }
  return 0;
}

int cmd_sd(const Globals& g, const std::string& s, std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  CoeffSeq xi = parse_seq(s, u);
  for (Exp x : xi.entries()) require_valid(x);
  auto d = in_sd(xi);
  if (g.json()) {
    json steps = json::array();
    if (d) {
      for (const std::string& line : d->steps()) steps.push_back(line);
    }
    emit(out, {{"seq", print(xi)}, {"in_sd", d != nullptr}, {"steps", steps}});
  } else if (d) {
    for (const std::string& line : d->steps()) out << line << '\n';
  } else {
    out << "not in SD\n";
  }
  return d ? 0 : 1;
}

EnumerateOptions corpus_options(const Globals& g, int size_cap, int chain_depth) {
  EnumerateOptions o = default_options(g.big_n);
  if (size_cap > 0) o.size_cap = size_cap;
  if (chain_depth >= 0) o.chain_depth = chain_depth;
  return o;
}

int cmd_enumerate(const Globals& g, int size_cap, int chain_depth,
                  const std::string& below, const std::string& out_path,
                  std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  EnumerateOptions o = corpus_options(g, size_cap, chain_depth);
  if (!below.empty()) {
    Ord b = parse_ord(below, u);
    require_valid(b);
    o.below = b;
  }
  Corpus c = enumerate(u, o);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw Usage("cannot open " + out_path + " for writing");
  }
  std::ostream& dest = out_path.empty() ? out : file;
  for (Ord t : c.terms) {
    if (g.json()) {
      emit(dest, {{"term", print(t)},
                  {"size", t.size()},
                  {"rule", rule_name(check_ot(t)->rule)}});
    } else {
      dest << print(t) << '\n';
    }
  }
  if (!out_path.empty()) {
    out << c.terms.size() << " terms written to " << out_path << '\n';
  }
  return 0;
}

int cmd_props(const Globals& g, int size_cap, int chain_depth, std::uint64_t triples,
              std::uint64_t seed, int seq_cap, std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  Corpus c = enumerate(u, corpus_options(g, size_cap, chain_depth));
  OracleReport all;
  auto append = [&](OracleReport r) {
    for (PropResult& p : r.props) all.props.push_back(std::move(p));
  };
  append(check_order_axioms(c, triples, seed, g.threads));
  append(check_structure_props(c));
  append(sd_cross_check(c, seq_cap));
  if (g.json()) {
    emit(out, {{"corpus_terms", c.terms.size()}, {"size_cap", c.size_cap}});
    out << all.to_json_lines();
  } else {
    out << "corpus terms=" << c.terms.size() << " size_cap=" << c.size_cap << '\n';
    out << all.to_text();
  }
  return all.pass() ? 0 : 1;
}

int cmd_descend(const Globals& g, const std::string& start, std::uint64_t steps,
                std::uint64_t seed, int size_cap, int chains, std::ostream& out) {
  Universe u(SystemParams{g.big_n});
  Ord s = start.empty() ? theorem_bound(u, 2) : parse_ord(start, u);
  require_valid(s);
  Corpus c = enumerate(u, corpus_options(g, size_cap, -1));
  std::map<std::size_t, int> histogram;
  bool all_terminated = true;
  for (int i = 0; i < chains; ++i) {
    DescentResult r = descent_probe(s, c, steps, seed + static_cast<std::uint64_t>(i));
    histogram[r.length()]++;
    all_terminated = all_terminated && r.terminated;
    if (g.json()) {
      json terms = json::array();
      for (Ord t : r.chain) terms.push_back(print(t));
      emit(out, {{"chain", i},
                 {"seed", seed + static_cast<std::uint64_t>(i)},
                 {"length", r.length()},
                 {"terminated", r.terminated},
                 {"terms", terms}});
    } else {
      out << "chain " << i << " seed=" << seed + static_cast<std::uint64_t>(i)
          << " length=" << r.length() << " terminated=" << (r.terminated ? "yes" : "no")
          << '\n';
      for (Ord t : r.chain) out << "  " << print(t) << '\n';
    }
  }
  if (chains > 1) {
    if (g.json()) {
      json h = json::object();
      for (auto [len, n] : histogram) h[std::to_string(len)] = n;
      emit(out, {{"histogram", h}});
    } else {
      out << "histogram\n";
      for (auto [len, n] : histogram) out << "  length " << len << ": " << n << '\n';
    }
  }
  return all_terminated ? 0 : 1;
}

int cmd_bound(const Globals& g, int n, std::ostream& out) {
  if (n < 0) throw Usage("--n must be non-negative");
  Universe u(SystemParams{g.big_n});
  Ord t = theorem_bound(u, n);
  if (g.json()) {
    emit(out, {{"n", n}, {"term", print(t)}});
  } else {
    out << print(t) << '\n';
  }
  return 0;
}

void report_error(const Globals& g, std::string_view kind, const std::string& msg,
                  std::ostream& err) {
  if (g.json()) {
    emit(err, {{"error", kind}, {"message", msg}});
  } else {
    err << "error: " << kind << ": " << msg << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Globals g;
  CLI::App app{"Ordinal notation toolkit", "otn"};
  app.require_subcommand(1);
  app.add_option("--big-n", g.big_n, "Reflection degree N")
      ->check(CLI::Range(3, 64));
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--threads", g.threads, "Worker threads for props")
      ->check(CLI::Range(1, 256));

  std::string t1, t2;
  auto* check = app.add_subcommand("check", "Validate a term");
  check->add_option("term", t1)->required();
  auto* cmp = app.add_subcommand("cmp", "Compare two terms");
  cmp->add_option("left", t1)->required();
  cmp->add_option("right", t2)->required();
  auto* kset = app.add_subcommand("kset", "Print K_delta(term)");
  kset->add_option("delta", t1)->required();
  kset->add_option("term", t2)->required();
  auto* mvec = app.add_subcommand("mvec", "Print the coefficient vector m");
  mvec->add_option("term", t1)->required();
  auto* sd = app.add_subcommand("sd", "Search an SD derivation");
  sd->add_option("seq", t1)->required();

  int size_cap = 0, chain_depth = -1, seq_cap = 10, chains = 1, bound_n = 0;
  std::uint64_t triples = 100000, seed = 1, steps = 1000;
  std::string below, out_path;
  auto* en = app.add_subcommand("enumerate", "List the validated corpus");
  en->add_option("--size-cap", size_cap)->check(CLI::Range(1, 64));
  en->add_option("--chain-depth", chain_depth)->check(CLI::Range(0, 16));
  en->add_option("--below", below);
  en->add_option("--out", out_path);
  auto* props = app.add_subcommand("props", "Run the oracle suites");
  props->add_option("--size-cap", size_cap)->check(CLI::Range(1, 64));
  props->add_option("--chain-depth", chain_depth)->check(CLI::Range(0, 16));
  props->add_option("--triples", triples);
  props->add_option("--seed", seed);
  props->add_option("--seq-cap", seq_cap)->check(CLI::Range(0, 64));
  auto* descend = app.add_subcommand("descend", "Random descending chains");
  descend->add_option("term", t1, "Start term (default: the bound for n=2)");
  descend->add_option("--steps", steps);
  descend->add_option("--seed", seed);
  descend->add_option("--size-cap", size_cap)->check(CLI::Range(1, 64));
  descend->add_option("--chains", chains)->check(CLI::Range(1, 100000));
  auto* bound = app.add_subcommand("bound", "Print the collapsing bound");
  bound->add_option("--n", bound_n)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    report_error(g, "Usage", e.what(), err);
    return 2;
  }

  try {
    if (*check) return cmd_check(g, t1, out);
    if (*cmp) return cmd_cmp(g, t1, t2, out);
    if (*kset) return cmd_kset(g, t1, t2, out);
    if (*mvec) return cmd_mvec(g, t1, out);
    if (*sd) return cmd_sd(g, t1, out);
    if (*en) return cmd_enumerate(g, size_cap, chain_depth, below, out_path, out);
    if (*props) return cmd_props(g, size_cap, chain_depth, triples, seed, seq_cap, out);
    if (*descend) return cmd_descend(g, t1, steps, seed, size_cap, chains, out);
    if (*bound) return cmd_bound(g, bound_n, out);
  } catch (const Usage& e) {
    report_error(g, "Usage", e.what(), err);
    return 2;
  } catch (const Error& e) {
    report_error(g, error_kind_name(e.kind()), e.what(), err);
    return 2;
  }
  return 2;
}

}  // namespace otn
