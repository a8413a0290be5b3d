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

// Concrete syntax for ordinal terms, exponent terms and coefficient
// sequences:
//
//   ord  := "0" | "K" | prin ("+" prin)*
//   prin := "phi(" ord "," ord ")" | "w^(" ord ")" | "Om(" ord ")"
//         | "psi(" ord ";" ord ")" | "psi(" ord ";" seq ";" ord ")"
//   seq  := "[" exp ("," exp)* "]"
//   exp  := "0" | ord | lam ("+" lam)*
//   lam  := "L^(" exp ")*(" ord ")"
//
// Decimal literals stand for finite sums of phi(0,0); K and decimals may
// also appear as summands. Whitespace is insignificant.

#ifndef OTN_SYNTAX_HPP_
#define OTN_SYNTAX_HPP_

#include <string>
#include <string_view>

#include "otn/terms.hpp"

namespace otn {

std::string print(Ord t);
std::string print(Exp x);
std::string print(const CoeffSeq& s);
std::string print(const KSet& s);

// Throw SyntaxError (with the byte offset) or ArityError.
Ord parse_ord(std::string_view text, Universe& u);
Exp parse_exp(std::string_view text, Universe& u);
CoeffSeq parse_seq(std::string_view text, Universe& u);

}  // namespace otn

#endif  // OTN_SYNTAX_HPP_
