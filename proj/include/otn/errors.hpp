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

#ifndef OTN_ERRORS_HPP_
#define OTN_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace otn {

enum class ErrorKind {
  Malformed,
  MixedUniverse,
  MalformedChain,
  UndefinedOnZero,
  IndexOutOfRange,
  LengthMismatch,
  CapExceeded,
  NoWitness,
  UnvalidatedInput,
  BadDelta,
  NotMahloTerm,
  ArgsNotBelowK,
  OutOfRange,
  BudgetExceeded,
  SyntaxError,
  ArityError,
  InvalidTerm,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (notably the CLI) can map it to a stable machine-readable tag.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace otn

#endif  // OTN_ERRORS_HPP_
