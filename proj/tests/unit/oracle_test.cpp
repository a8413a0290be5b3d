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

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "otn/oracle.hpp"
#include "otn/order.hpp"
#include "otn/syntax.hpp"

namespace otn {
namespace {

using test::Fixture;

Corpus small(Fixture& f, int cap, int depth = 0) {
  EnumerateOptions o;
  o.size_cap = cap;
  o.chain_depth = depth;
  return enumerate(f.u, o);
}

std::vector<std::string> printed(const Corpus& c) {
  std::vector<std::string> out;
  for (Ord t : c.terms) out.push_back(print(t));
  return out;
}

TEST_CASE("tiny caps") {
  Fixture f;
  CHECK(small(f, 0).terms.empty());
  CHECK(printed(small(f, 1)) == std::vector<std::string>{"0", "K"});
  auto three = printed(small(f, 3));
  CHECK(three == std::vector<std::string>{"0", "1", "psi(K; 0)", "psi(K; K)", "K", "K+K"});
}

TEST_CASE("enumeration is deterministic and sorted") {
  Fixture f, g;
  Corpus a = small(f, 8, 1), b = small(g, 8, 1);
  CHECK(printed(a) == printed(b));
  for (std::size_t i = 0; i + 1 < a.terms.size(); ++i) {
    CHECK(compare(a.terms[i], a.terms[i + 1]) == Cmp::LT);
  }
  CHECK(a.chain_terms > 0);
}

TEST_CASE("below filter and budget") {
  Fixture f;
  EnumerateOptions o;
  o.size_cap = 6;
  o.below = f.o("psi(K; 0)");
  Corpus c = enumerate(f.u, o);
  for (Ord t : c.terms) CHECK(lt(t, *o.below));
  o.below.reset();
  o.budget = 5;
  try {
    enumerate(f.u, o);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
}

TEST_CASE("order axioms on a small corpus") {
  Fixture f;
  Corpus c = small(f, 7, 1);
  OracleReport r = check_order_axioms(c, 2000, 7);
  CHECK(r.pass());
  OracleReport r2 = check_order_axioms(c, 2000, 7, 3);
  CHECK(r.to_text() == r2.to_text());
  Corpus atoms = small(f, 1);
  CHECK(check_order_axioms(atoms, 10, 1).pass());
}

TEST_CASE("a corrupted corpus is caught") {
  Fixture f;
  Corpus c = small(f, 5);
  std::reverse(c.terms.begin(), c.terms.end());
  OracleReport r = check_order_axioms(c, 100, 1);
  CHECK_FALSE(r.pass());
  const PropResult* sorted = r.find("sorted_chain");
  REQUIRE(sorted);
  CHECK(sorted->failures == sorted->checked);
  CHECK_FALSE(sorted->counterexamples.empty());
}

TEST_CASE("propositions on a small corpus") {
  Fixture f;
  Corpus c = small(f, 7, 1);
  OracleReport r = check_structure_props(c);
  CHECK(r.pass());
  CHECK(r.find("m_in_sd")->checked > 0);
  Corpus empty;
  empty.universe = &f.u;
  CHECK(check_structure_props(empty).pass());
}

TEST_CASE("SD cross-check") {
  Fixture f;
  Corpus c = small(f, 6, 1);
  OracleReport r = sd_cross_check(c, 8);
  CHECK(r.pass());
  CHECK(r.find("sd_implies_conditions")->checked > 0);
}

TEST_CASE("descent probes") {
  Fixture f;
  Corpus c = small(f, 6);
  DescentResult zero = descent_probe(f.u.zero(), c, 100, 1);
  CHECK(zero.length() == 0);
  CHECK(zero.terminated);
  DescentResult k = descent_probe(f.u.big_k(), c, 1000, 3);
  CHECK(k.terminated);
  CHECK(k.chain.back() == f.u.zero());
  for (std::size_t i = 0; i + 1 < k.chain.size(); ++i) CHECK(lt(k.chain[i + 1], k.chain[i]));
}

TEST_CASE("report formats") {
  OracleReport r;
  PropResult p;
  p.name = "x";
  p.checked = 3;
  p.failures = 1;
  p.counterexamples.push_back("psi(K; 0)");
  r.props.push_back(p);
  CHECK(r.to_text() == "x FAIL checked=3 failures=1\n  counterexample: psi(K; 0)\n");
  CHECK(r.to_json_lines().find("\"status\":\"FAIL\"") != std::string::npos);
}

}  // namespace
}  // namespace otn
