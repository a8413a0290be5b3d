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

// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--artifacts DIR] [--expect-fail I,J,...]
//
// Exits 0 when the set of failing criteria equals the expected set.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "otn/arith.hpp"
#include "otn/cli.hpp"
#include "otn/oracle.hpp"
#include "otn/order.hpp"
#include "otn/syntax.hpp"
#include "otn/validate.hpp"

namespace {

using namespace otn;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string cli(const std::vector<std::string>& args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = run_cli(args, out, err);
  if (code) *code = c;
  return out.str();
}

std::string failing(const OracleReport& r, const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) {
    const PropResult* p = r.find(n);
    if (!p) {
      s += " missing:" + n;
    } else if (!p->pass()) {
      s += " " + n + "(" + std::to_string(p->failures) + "/" + std::to_string(p->checked) + ")";
      if (!p->counterexamples.empty()) s += " e.g. " + p->counterexamples.front() + ";";
    }
  }
  return s;
}

const int kSystems[] = {3, 4};

Outcome order_axioms() {
  Outcome o;
  std::ostringstream d;
  for (int n : kSystems) {
    auto t0 = Clock::now();
    Universe u(SystemParams{n});
    Corpus c = enumerate(u, default_options(n));
    OracleReport r = check_order_axioms(c, 100000, 2026);
    double secs = since(t0);
    bool ok = r.pass() && c.terms.size() >= 2000 && secs <= 60.0;
    o.pass = o.pass && ok;
    d << " N=" << n << ": terms=" << c.terms.size() << " pairs="
      << r.find("trichotomy")->checked << " triples=" << r.find("transitivity")->checked
      << (r.pass() ? "" : failing(r, {"irreflexivity", "trichotomy", "antisymmetry",
                                      "sorted_chain", "transitivity"}))
      << (secs <= 60.0 ? "" : " over 60s") << ";";
  }
  o.detail = d.str();
  return o;
}

const std::vector<std::string> kStructural{
    "head_tail_monotone",          "seq_lt_upward",
    "irreducible_below_head", "sd_prefixes",
    "sd_no_gaps",         "sd_tail_step_down",
    "sd_irreducible",     "m_in_sd",
    "stage_increases",  "components_below_stage",
    "rule_vs_series"};

std::map<int, OracleReport> props_cache;

const OracleReport& props_for(int n) {
  auto it = props_cache.find(n);
  if (it != props_cache.end()) return it->second;
  Universe u(SystemParams{n});
  Corpus c = enumerate(u, default_options(n));
  return props_cache.emplace(n, check_structure_props(c)).first->second;
}

Outcome structural() {
  Outcome o;
  for (int n : kSystems) {
    const OracleReport& r = props_for(n);
    std::string bad = failing(r, kStructural);
    std::uint64_t checked = 0;
    for (const auto& name : kStructural) {
      if (const PropResult* p = r.find(name)) checked += p->checked;
    }
    o.pass = o.pass && bad.empty();
    o.detail += " N=" + std::to_string(n) + ": checked=" + std::to_string(checked) +
                (bad.empty() ? "" : " failing:" + bad) + ";";
  }
  return o;
}

Outcome sandwich() {
  Outcome o;
  for (int n : kSystems) {
    const PropResult* p = props_for(n).find("sandwich");
    o.pass = o.pass && p && p->pass() && p->checked > 0;
    o.detail += " N=" + std::to_string(n) + ": instances=" + std::to_string(p ? p->checked : 0) +
                " violations=" + std::to_string(p ? p->failures : 0) + ";";
  }
  return o;
}

Outcome sd_check() {
  Outcome o;
  for (int n : kSystems) {
    Universe u(SystemParams{n});
    Corpus c = enumerate(u, default_options(n));
    OracleReport r = sd_cross_check(c, 12);
    const PropResult* imply = r.find("sd_implies_conditions");
    const PropResult* rep = r.find("sd_replay");
    const PropResult* gap = r.find("sd_conditions_without_derivation");
    o.pass = o.pass && imply->pass() && rep->pass() && imply->checked > 0;
    o.detail += " N=" + std::to_string(n) + ": accepted=" + std::to_string(imply->checked) +
                " violations=" + std::to_string(imply->failures) +
                " replay_failures=" + std::to_string(rep->failures) +
                " unexplained=" + std::to_string(gap->checked) + ";";
  }
  return o;
}

Outcome bound_pipeline() {
  Outcome o;
  auto t0 = Clock::now();
  Universe u(SystemParams{4});
  Ord prev;
  for (int n = 0; n <= 6; ++n) {
    Ord t = theorem_bound(u, n);
    if (!is_valid(t)) o.pass = false;
    if (n > 0 && cmp_ord(prev, t) != Cmp::LT) o.pass = false;
    prev = t;
  }
  double secs = since(t0);
  o.pass = o.pass && secs <= 5.0;
  o.detail = " n=0..6 valid and increasing, " + std::to_string(secs) + "s";
  return o;
}

Outcome determinism() {
  Outcome o;
  for (int n : kSystems) {
    std::string big_n = std::to_string(n);
    std::vector<std::string> en{"--big-n", big_n, "enumerate"};
    // Pair checks run on two workers; the unit tests compare 1 and 3.
    std::vector<std::string> pr{"--threads", "2", "--big-n", big_n, "props"};
    std::string e1 = cli(en), e2 = cli(en);
    std::string p1 = cli(pr), p2 = cli(pr);
    bool ok = !e1.empty() && !p1.empty() && e1 == e2 && p1 == p2;
    o.pass = o.pass && ok;
    o.detail += " N=" + big_n + ": enumerate " + (e1 == e2 ? "identical" : "DIFFERS") +
                ", props " + (p1 == p2 ? "identical" : "DIFFERS") + ";";
  }
  return o;
}

Outcome descent(const std::filesystem::path& artifacts) {
  Outcome o;
  Universe u(SystemParams{4});
  Corpus c = enumerate(u, default_options(4));
  Ord start = theorem_bound(u, 2);
  std::map<std::size_t, int> hist;
  int terminated = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    DescentResult r = descent_probe(start, c, 100000, 1000 + i);
    hist[r.length()]++;
    if (r.terminated) ++terminated;
  }
  o.pass = terminated == 100;
  std::ostringstream h;
  h << "# descent chain lengths from " << print(start) << ", N=4, default corpus, seeds 1000..1099\n";
  for (auto [len, k] : hist) h << len << ' ' << k << '\n';
  if (!artifacts.empty()) {
    std::ofstream(artifacts / "descent_histogram_n4.txt") << h.str();
  }
  o.detail = " terminated=" + std::to_string(terminated) + "/100 lengths";
  for (auto [len, k] : hist) o.detail += " " + std::to_string(len) + ":" + std::to_string(k);
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::uint64_t rt = 0, rt_bad = 0, agree = 0, disagree = 0;
  for (int n : kSystems) {
    Universe u(SystemParams{n});
    Corpus c = enumerate(u, default_options(n));
    for (Ord t : c.terms) {
      ++rt;
      if (parse_ord(print(t), u) != t) ++rt_bad;
    }
    if (n != 4) continue;
    std::mt19937_64 rng(88);
    for (int i = 0; i < 10000; ++i) {
      Ord a = c.terms[rng() % c.terms.size()], b = c.terms[rng() % c.terms.size()];
      std::string got = cli({"--big-n", "4", "cmp", print(a), print(b)});
      std::string want = std::string(1, cmp_symbol(cmp_ord(a, b))) + "\n";
      if (got == want) {
        ++agree;
      } else {
        ++disagree;
      }
    }
  }
  o.pass = rt_bad == 0 && disagree == 0;
  o.detail = " round-trip " + std::to_string(rt - rt_bad) + "/" + std::to_string(rt) +
             ", cmp agreement " + std::to_string(agree) + "/" + std::to_string(agree + disagree);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path artifacts;
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--artifacts" && i + 1 < argc) {
      artifacts = argv[++i];
    } else if (a == "--expect-fail" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) expected.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--artifacts DIR] [--expect-fail I,J,...]\n";
      return 2;
    }
  }
  if (!artifacts.empty()) std::filesystem::create_directories(artifacts);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"order axioms", order_axioms},
      {"structural propositions", structural},
      {"sandwich law", sandwich},
      {"SD cross-check", sd_check},
      {"collapsing bound pipeline", bound_pipeline},
      {"determinism", determinism},
      {"descent probes", [&] { return descent(artifacts); }},
      {"round-trip", round_trip},
  };
  std::set<int> failed;
  std::string summary;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    int id = static_cast<int>(i) + 1;
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string(" exception: ") + e.what();
    }
    if (!o.pass) failed.insert(id);
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first
         << " (" << static_cast<int>(since(t0) * 10) / 10.0 << "s)" << o.detail;
    if (!o.pass && expected.count(id)) line << " [expected failure]";
    std::cout << line.str() << std::endl;
    summary += line.str() + "\n";
  }
  if (!artifacts.empty()) std::ofstream(artifacts / "acceptance.txt") << summary;
  if (failed != expected) {
    std::cout << "failing criteria differ from the expected set" << std::endl;
    return 1;
  }
  return 0;
}
