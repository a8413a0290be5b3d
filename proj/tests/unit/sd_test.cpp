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
#include "otn/sd.hpp"

namespace otn {
namespace {

using test::Fixture;

TEST_CASE("base rule") {
  Fixture f;
  for (const char* s : {"[0,0]", "[0,1]", "[0,K]", "[0,psi(K; 0)]"}) {
    auto d = in_sd(f.q(s));
    REQUIRE(d);
    CHECK(d->kind == SdDerivation::Kind::Base);
    CHECK(d->steps().size() == 1);
  }
}

TEST_CASE("extension rule") {
  Fixture f;
  auto d = in_sd(f.q("[L^(2)*(1),1]"));
  REQUIRE(d);
  CHECK(d->kind == SdDerivation::Kind::Extend);
  CHECK(d->k == 2);
  CHECK(d->zeta == f.e("2"));
  CHECK(d->coeff == f.u.one());
  CHECK(d->keep_tail);
  REQUIRE(d->premise);
  CHECK(d->premise->result == f.q("[0,1]"));
  REQUIRE(d->side);
  CHECK(d->side->result == f.q("[0,2]"));
  auto steps = d->steps();
  REQUIRE(steps.size() == 3);
  CHECK(steps.back() == "Extend(k=2, zeta=2, a=1, keep tail) => [L^(2)*(1),1]");
  CHECK(replay(*d) == f.q("[L^(2)*(1),1]"));
  CHECK(in_sd(f.q("[L^(1)*(1),0]")));
}

TEST_CASE("rejections") {
  Fixture f;
  CHECK_FALSE(in_sd(f.q("[1,1]")));
  CHECK_FALSE(in_sd(f.q("[1,0]")));
  CHECK_FALSE(in_sd(f.q("[L^(1)*(1),1]")));
}

TEST_CASE("necessary conditions") {
  Fixture f;
  CHECK(sd_necessary_conditions(f.q("[0,0]")).all());
  CHECK(sd_necessary_conditions(f.q("[L^(2)*(1),1]")).all());
  SdConditions c = sd_necessary_conditions(f.q("[L^(1)*(1),1]"));
  CHECK_FALSE(c.irreducible);
  CHECK_FALSE(c.all());
  CHECK_FALSE(c.first_failure().empty());
  for (const char* s : {"[0,1]", "[0,K]", "[L^(1)*(1),0]"}) {
    CHECK(sd_necessary_conditions(f.q(s)).all());
  }
}

TEST_CASE("longer sequences") {
  Fixture f(5);
  CHECK(in_sd(f.q("[0,0,1]")));
  CHECK_FALSE(in_sd(f.q("[1,0,0]")));
  auto d = in_sd(f.q("[0,L^(2)*(1),1]"));
  REQUIRE(d);
  CHECK(d->k == 3);
  CHECK(replay(*d) == f.q("[0,L^(2)*(1),1]"));
}

}  // namespace
}  // namespace otn
