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

#ifndef OTN_ORDER_HPP_
#define OTN_ORDER_HPP_

#include <vector>

#include "otn/terms.hpp"

namespace otn {

enum class Cmp : signed char { LT = -1, EQ = 0, GT = 1 };

inline Cmp flip(Cmp c) { return static_cast<Cmp>(-static_cast<int>(c)); }
char cmp_symbol(Cmp c);

// Both throw UnvalidatedInput unless every argument is a member of OT (resp.
// E).
Cmp cmp_ord(Ord s, Ord t);
Cmp cmp_exp(Exp x, Exp y);

// Unchecked comparisons. Meaningful on validated terms and on the subterm
// pairs that validation itself inspects.
Cmp compare(Ord s, Ord t);
Cmp compare(Exp x, Exp y);
inline bool lt(Ord s, Ord t) { return compare(s, t) == Cmp::LT; }
inline bool le(Ord s, Ord t) { return compare(s, t) != Cmp::GT; }
inline bool lt(Exp x, Exp y) { return compare(x, y) == Cmp::LT; }
inline bool le(Exp x, Exp y) { return compare(x, y) != Cmp::GT; }

// Principal terms that are fixed points of phi(0, .) for every smaller
// argument: Omega and psi terms.
bool strongly_critical(Ord t);
// psi-terms that are also fixed points of beta -> Omega_beta.
bool omega_fixed_point(Ord t);

void sort_by_order(std::vector<Ord>& terms);

}  // namespace otn

#endif  // OTN_ORDER_HPP_
