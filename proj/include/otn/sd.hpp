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

// Membership in the class SD of coefficient sequences by goal-directed
// derivation search.

#ifndef OTN_SD_HPP_
#define OTN_SD_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "otn/terms.hpp"

namespace otn {

struct SdDerivation {
  enum class Kind { Base, Extend };

  Kind kind = Kind::Base;
  CoeffSeq result;

  // Extend: result_k = premise_k + Lambda^zeta * coeff.
  int k = 0;
  Exp zeta;
  Ord coeff;
  // True when the positions after k are copied from the premise, false when
  // they are reset to zero.
  bool keep_tail = false;
  std::shared_ptr<const SdDerivation> premise;
  // Derivation of (xi_2, ..., xi_k, zeta) * 0.
  std::shared_ptr<const SdDerivation> side;

  // One line per rule application, premises first.
  std::vector<std::string> steps() const;
};

// nullptr when no derivation is found.
std::shared_ptr<const SdDerivation> in_sd(const CoeffSeq& xi);

// Re-checks every side condition and rebuilds the derived sequence;
// nullopt if some step does not apply.
std::optional<CoeffSeq> replay(const SdDerivation& d);

struct SdConditions {
  bool prefixes = true;
  bool no_gaps = true;
  bool tail_step_down = true;
  bool irreducible = true;

  bool all() const {
    return prefixes && no_gaps && tail_step_down && irreducible;
  }
  std::string first_failure() const;
};

SdConditions sd_necessary_conditions(const CoeffSeq& xi);

}  // namespace otn

#endif  // OTN_SD_HPP_
