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

// Membership in OT and E, the hull sets K_delta, the coefficient vector m,
// and classification of psi-terms by formation rule.

#ifndef OTN_VALIDATE_HPP_
#define OTN_VALIDATE_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otn/terms.hpp"

namespace otn {

enum class Rule {
  None,  // no formation rule applies
  Atom,
  Sum,
  Veblen,
  OmegaExp,
  OmegaIdx,
  Psi9,
  Psi10,
  Psi11,
  Psi12,
};

std::string_view rule_name(Rule r);

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct ValidationReport {
  bool ok = false;
  Rule rule = Rule::None;
  std::vector<Check> checks;
  // Absent for K, which the formation rules treat on its own.
  std::optional<CoeffSeq> m_vec;
  // Psi11 only: the position k and the recovered b.
  int step_k = 0;
  Ord step_b;

  // Name of the first failing check, empty when ok.
  std::string failure() const;
};

// Validates bottom-up; reports are cached per term.
std::shared_ptr<const ValidationReport> check_ot(Ord alpha);
bool is_valid(Ord alpha);
bool is_valid_exp(Exp x);
// Throws UnvalidatedInput.
void require_valid(Ord alpha);
void require_valid(Exp x);

// Throws InvalidTerm carrying the failing condition.
[[noreturn]] void throw_invalid(Ord alpha, const ValidationReport& report);

// delta must be 0, K or a psi-term (BadDelta otherwise).
KSet k_delta(Ord delta, Ord alpha);
KSet k_delta(Ord delta, std::span<const Ord> alphas);
KSet k_delta(Ord delta, const KSet& alphas);
// Every element below gamma.
bool all_below(const KSet& s, Ord gamma);
// Some element at least b.
bool some_at_least(const KSet& s, Ord b);

// nullopt for K.
std::optional<CoeffSeq> m_vec(Ord alpha);
// psi-term with a nonzero coefficient vector.
bool is_mahlo(Ord alpha);
// K, Omega at a successor, or a Mahlo psi-term.
bool is_regular(Ord alpha);

bool hull_member(Ord gamma, Ord delta, Ord alpha);

// Checks the formation rule against the length L of the collapsing series;
// throws NotMahloTerm unless alpha is a validated Mahlo psi-term.
bool rule_vs_series(Ord alpha);

}  // namespace otn

#endif  // OTN_VALIDATE_HPP_
