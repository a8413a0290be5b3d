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

#include "helpers.hpp"
#include "otn/validate.hpp"

namespace otn {
namespace {

using test::Fixture;

Rule rule_of(Fixture& f, const char* s) { return check_ot(f.o(s))->rule; }

TEST_CASE("rule classification") {
  Fixture f;
  CHECK(rule_of(f, "psi(K; 0)") == Rule::Psi9);
  CHECK(rule_of(f, test::kPsi10) == Rule::Psi10);
  CHECK(rule_of(f, test::kPsi11) == Rule::Psi11);
  CHECK(rule_of(f, test::kPsi12) == Rule::Psi12);
  CHECK(rule_of(f, "K+1") == Rule::Sum);
  CHECK(rule_of(f, "phi(1,0)") == Rule::Veblen);
  CHECK(rule_of(f, "w^(K+1)") == Rule::OmegaExp);
  CHECK(rule_of(f, "Om(1)") == Rule::OmegaIdx);
  CHECK(rule_of(f, "K") == Rule::Atom);
  for (const char* s : {"psi(K; 0)", test::kPsi10, test::kPsi11, test::kPsi12}) {
    CHECK(is_valid(f.o(s)));
  }
}

TEST_CASE("Psi11 recovers k and b") {
  Fixture f;
  auto r = check_ot(f.o(test::kPsi11));
  CHECK(r->step_k == 2);
  CHECK(r->step_b == f.u.finite(2));
}

TEST_CASE("failures name the first violated condition") {
  Fixture f;
  auto r = check_ot(f.o("psi(K; [0,0]; 1)"));
  CHECK_FALSE(r->ok);
  CHECK(r->rule == Rule::Psi10);
  CHECK(r->failure() == "0<b");
  CHECK(check_ot(f.o("1+K"))->failure() == "summands weakly decreasing");
  CHECK_FALSE(is_valid(f.o("phi(0,Om(1))")));
  CHECK_FALSE(is_valid(f.o("Om(K)")));
  CHECK_FALSE(is_valid(f.o("w^(1)")));
  CHECK_FALSE(is_valid(f.o("psi(phi(1,0); 0)")));
  // The stage must dominate the hull of the base.
  CHECK_FALSE(is_valid(f.o("psi(Om(1); psi(K; K))")));
  try {
    require_valid(f.o("psi(K; [0,0]; 1)"));
    FAIL("expected UnvalidatedInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnvalidatedInput);
  }
}

TEST_CASE("Psi12 conditions") {
  Fixture f;
  const std::string pi = test::kPsi11;
  // Not in SD.
  CHECK(check_ot(f.o("psi(" + pi + "; [1,1]; 3)"))->failure() == "nu in SD");
  // Not a step-down of a part of m_2(pi) = L^(1)*(2).
  CHECK(check_ot(f.o("psi(" + pi + "; [L^(1)*(3),0]; 3)"))->failure() == "nu<_sp m_2(pi)");
  // The stage must exceed the stage 2 of pi.
  CHECK(check_ot(f.o("psi(" + pi + "; [L^(1)*(1),0]; 2)"))->failure() == "K_alpha(pi,a)<a");
}

TEST_CASE("K_delta") {
  Fixture f;
  Ord t = f.o("psi(K; K)");
  KSet k0 = k_delta(f.u.zero(), t);
  CHECK(k0.size() == 1);
  CHECK(k0.contains(f.u.big_k()));
  CHECK(k_delta(f.u.big_k(), t).empty());
  CHECK(k_delta(f.u.zero(), f.u.big_k()).empty());
  CHECK_THROWS_AS(k_delta(f.u.one(), t), Error);
  KSet k12 = k_delta(f.u.zero(), f.o(test::kPsi12));
  CHECK(k12.contains(f.u.finite(3)));
  CHECK(k12.contains(f.u.finite(2)));
  CHECK(k12.contains(f.u.one()));
}

TEST_CASE("hull membership") {
  Fixture f;
  Ord t = f.o("psi(K; K)");
  CHECK(hull_member(f.u.one(), f.u.big_k(), t));
  CHECK_FALSE(hull_member(f.u.big_k(), f.u.zero(), t));
  CHECK(hull_member(f.o("K+1"), f.u.zero(), t));
}

TEST_CASE("coefficient vectors") {
  Fixture f;
  CHECK(*m_vec(f.o("Om(2)")) == f.q("[1,0]"));
  CHECK(*m_vec(f.o("Om(phi(0,1))")) == f.q("[0,0]"));
  CHECK(*m_vec(f.o(test::kPsi10)) == f.q("[0,1]"));
  CHECK(*m_vec(f.o(test::kPsi11)) == f.q("[L^(1)*(2),0]"));
  CHECK_FALSE(m_vec(f.u.big_k()).has_value());
  CHECK(is_mahlo(f.o(test::kPsi10)));
  CHECK_FALSE(is_mahlo(f.o("psi(K; 0)")));
  CHECK(is_regular(f.o("Om(2)")));
  CHECK_FALSE(is_regular(f.o("Om(phi(0,1))")));
  CHECK(is_regular(f.u.big_k()));
}

TEST_CASE("rule against collapsing series") {
  Fixture f;
  CHECK(rule_vs_series(f.o(test::kPsi10)));
  CHECK(rule_vs_series(f.o(test::kPsi11)));
  CHECK(rule_vs_series(f.o(test::kPsi12)));
  CHECK_THROWS_AS(rule_vs_series(f.o("psi(K; 0)")), Error);
  // A step-down collapse over a step-down collapse: the series has length 4
  // although the rule is the step-down rule.
  const std::string inner =
      "psi(psi(psi(K; [0,1]; 1); [L^(1)*(phi(1,0)),0]; phi(1,0)); [L^(1)*(phi(0,1)),0]; Om(1))";
  Ord outer = f.o("psi(" + inner + "; [L^(1)*(1),0]; Om(Om(1)))");
  REQUIRE(is_valid(outer));
  CHECK(check_ot(outer)->rule == Rule::Psi12);
  CHECK(collapsing_series(outer).size() == 5);
  CHECK_FALSE(rule_vs_series(outer));
}

TEST_CASE("N=3 system") {
  Fixture f(3);
  CHECK(check_ot(f.o("psi(K; [1]; 1)"))->rule == Rule::Psi10);
  Ord t = f.o("psi(psi(K; [2]; 2); [1]; 3)");
  CHECK(check_ot(t)->rule == Rule::Psi12);
  CHECK(rule_vs_series(t));
}

}  // namespace
}  // namespace otn
