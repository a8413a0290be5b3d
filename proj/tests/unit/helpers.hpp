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

#ifndef OTN_TESTS_UNIT_HELPERS_HPP_
#define OTN_TESTS_UNIT_HELPERS_HPP_

#include <string>

#include "otn/syntax.hpp"
#include "otn/terms.hpp"

namespace otn::test {

struct Fixture {
  explicit Fixture(int n = 4) : u(SystemParams{n}) {}

  Ord o(const std::string& s) { return parse_ord(s, u); }
  Exp e(const std::string& s) { return parse_exp(s, u); }
  CoeffSeq q(const std::string& s) { return parse_seq(s, u); }

  Universe u;
};

// The running examples.
inline const char* const kPsi10 = "psi(K; [0,1]; 1)";
inline const char* const kPsi11 = "psi(psi(K; [0,1]; 1); [L^(1)*(2),0]; 2)";
inline const char* const kPsi12 =
    "psi(psi(psi(K; [0,1]; 1); [L^(1)*(2),0]; 2); [L^(1)*(1),0]; 3)";

}  // namespace otn::test

#endif  // OTN_TESTS_UNIT_HELPERS_HPP_
