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

#include <vector>

#include "helpers.hpp"
#include "otn/cnf.hpp"
#include "otn/order.hpp"

namespace otn {
namespace {

using test::Fixture;

TEST_CASE("components") {
  Fixture f;
  CHECK(components(f.u.exp_zero()).empty());
  KSet k = components(f.e("psi(K; 0)"));
  CHECK(k.size() == 1);
  CHECK(k.contains(f.o("psi(K; 0)")));
  KSet k2 = components(f.e("L^(L^(1)*(1))*(2)"));
  CHECK(k2.size() == 2);
  CHECK(k2.contains(f.u.one()));
  CHECK(k2.contains(f.u.finite(2)));
}

TEST_CASE("head and tail data") {
  Fixture f;
  Exp x = f.e("L^(2)*(3)+L^(1)*(2)");
  HeadTail h = head_tail(x);
  CHECK(h.he == f.e("2"));
  CHECK(h.te == f.e("1"));
  CHECK(h.hd == f.e("L^(2)*(3)"));
  CHECK(h.tl == f.e("L^(1)*(2)"));
  Exp a = f.e("psi(K; 0)");
  CHECK(he(a).is_zero());
  CHECK(te(a).is_zero());
  CHECK(hd(a) == a);
  CHECK(he_iter(f.e("L^(L^(1)*(1))*(1)"), 2) == f.e("1"));
  CHECK_FALSE(he_iter(f.e("1"), 2).has_value());
  CHECK_THROWS_AS(he(f.u.exp_zero()), Error);
}

TEST_CASE("parts") {
  Fixture f;
  Exp x = f.e("L^(2)*(3)+L^(1)*(2)");
  CHECK(is_part(f.e("L^(2)*(3)"), x));
  CHECK(is_part(f.u.exp_zero(), x));
  CHECK(is_part(x, x));
  CHECK_FALSE(is_part(f.e("L^(1)*(2)"), x));
  CHECK(parts_of(x).size() == 3);
}

TEST_CASE("iterated tail parts") {
  Fixture f;
  Exp x = f.e("L^(2)*(3)+L^(1)*(2)");
  std::vector<Exp> one{x};
  CHECK(iterated_tail_parts(one, x));
  std::vector<Exp> two{x, te(x)};
  CHECK(iterated_tail_parts(two, x));
  std::vector<Exp> bad{f.e("L^(1)*(2)"), f.e("5")};
  CHECK_FALSE(iterated_tail_parts(bad, x));
}

TEST_CASE("sequence below an exponent") {
  Fixture f;
  Exp x = f.e("L^(2)*(1)");
  for (const char* s : {"1", "K", "L^(1)*(1)", "L^(2)*(1)", "L^(3)*(1)"}) {
    std::vector<Exp> nu{f.e(s)};
    CHECK(seq_lt(nu, x) == lt(f.e(s), x));
  }
  std::vector<Exp> zeros{f.u.exp_zero(), f.u.exp_zero()};
  CHECK(seq_lt(zeros, f.e("1")));
  std::vector<Exp> v{f.e("1"), f.u.exp_zero()};
  CHECK(seq_lt(v, x));
}

TEST_CASE("seq_lt_k") {
  Fixture f;
  CoeffSeq a = f.q("[0,1]");
  CHECK_FALSE(seq_lt_k(a, a, 2));
  CHECK_FALSE(seq_lt_k(a, a, 3));
  CHECK(seq_lt_k(f.q("[0,0]"), f.q("[0,1]"), 3));
  CHECK_FALSE(seq_lt_k(f.q("[1,0]"), f.q("[0,1]"), 2));
}

TEST_CASE("step-downs") {
  Fixture f;
  CHECK(step_down(f.e("L^(2)*(2)+L^(1)*(5)"), f.e("L^(2)*(3)")));
  CHECK(step_down(f.e("1"), f.e("2")));
  CHECK_FALSE(step_down(f.e("2"), f.e("1")));
  Exp x = f.e("L^(1)*(2)");
  CHECK_FALSE(step_down(x, x));
  CHECK(step_down_eq(x, x));
  std::vector<Exp> z{f.u.exp_zero()};
  CHECK(vec_step_down(z, f.e("1")));
  std::vector<Exp> v{f.e("L^(1)*(1)"), f.u.exp_zero()};
  CHECK(vec_step_down(v, x));
  std::vector<Exp> w{f.e("1")};
  CHECK_FALSE(vec_step_down(w, f.e("1")));
}

TEST_CASE("sp relations") {
  Fixture f;
  Exp x = f.e("L^(1)*(2)");
  CHECK(sp_rel(x, x, false));
  CHECK_FALSE(sp_rel(f.e("1"), f.u.exp_zero(), true));
  std::vector<Exp> v{f.e("L^(1)*(1)"), f.u.exp_zero()};
  CHECK(vec_sp(v, x));
  CHECK(sp_position(v, x) == 0);
  Exp y = f.e("L^(2)*(1)+L^(1)*(2)");
  std::vector<Exp> w{f.e("L^(2)*(1)+L^(1)*(1)"), f.u.exp_zero()};
  CHECK(sp_position(w, y) == 0);
  std::vector<Exp> bad{f.e("L^(3)*(1)")};
  CHECK_THROWS_AS(sp_position(bad, x), Error);
}

TEST_CASE("lexicographic order from index k") {
  Fixture f;
  CHECK(lx_lt(f.q("[0,0]"), f.q("[L^(1)*(1),0]"), 2));
  CHECK_FALSE(lx_lt(f.q("[0,1]"), f.q("[L^(1)*(1),0]"), 2));
  CHECK(lx_lt(f.q("[0,1]"), f.q("[L^(2)*(1),0]"), 2));
  Fixture g(3);
  CHECK_THROWS_AS(lx_lt(f.q("[0,1]"), g.q("[1]"), 2), Error);
}

TEST_CASE("Lambda towers") {
  Fixture f;
  Exp x = f.e("2");
  CHECK(lam_tower(x, 0) == x);
  CHECK(lam_tower(f.e("1"), 1) == f.e("L^(1)*(1)"));
  CHECK(lam_tower(f.u.exp_zero(), 1) == f.e("1"));
  CHECK(lam_tower(f.u.exp_zero(), 2) == f.e("L^(1)*(1)"));
  CHECK_THROWS_AS(lam_tower(x, 65), Error);
}

TEST_CASE("irreducibility") {
  Fixture f;
  CHECK(irreducible(f.q("[0,0]")));
  CHECK(irreducible(f.q("[L^(2)*(1),1]")));
  CHECK_FALSE(irreducible(f.q("[L^(1)*(1),1]")));
  CHECK(irreducible_reduct(f.q("[L^(1)*(1),1]")) == f.q("[0,1]"));
  CHECK(irreducible_reduct(f.q("[0,0]")) == f.q("[0,0]"));
  CoeffSeq ok = f.q("[L^(2)*(1),1]");
  CHECK(irreducible_reduct(ok) == ok);
}

TEST_CASE("exponent arithmetic") {
  Fixture f;
  CHECK(exp_add(f.e("L^(1)*(1)"), f.e("L^(2)*(1)")) == f.e("L^(2)*(1)"));
  CHECK(exp_add(f.e("L^(1)*(1)"), f.e("L^(1)*(1)")) == f.e("L^(1)*(2)"));
  CHECK(drop_tail(f.e("L^(2)*(3)+L^(1)*(2)")) == f.e("L^(2)*(3)"));
  CHECK(drop_tail(f.u.exp_zero()).is_zero());
}

}  // namespace
}  // namespace otn
