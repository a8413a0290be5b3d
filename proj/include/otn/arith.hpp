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

// Normalizing constructors. Every function here returns a validated term and
// expects validated arguments.

#ifndef OTN_ARITH_HPP_
#define OTN_ARITH_HPP_

#include "otn/terms.hpp"

namespace otn {

Ord add(Ord a, Ord b);
Ord natural_sum(Ord a, Ord b);

Ord omega_exp(Ord b);
// Throws ArgsNotBelowK.
Ord veblen(Ord b, Ord g);
// Throws OutOfRange unless 0 < b < K.
Ord omega_idx(Ord b);

// Throw InvalidTerm naming the failing condition.
Ord psi(Ord pi, const CoeffSeq& nu, Ord a);
Ord psi0(Ord pi, Ord a);
Ord psiK(Ord b, Ord a);
// nu_k = m_k(pi) + Lambda^{m_{k+1}(pi)} * b for the k fixed by m(pi).
Ord psi_step(Ord pi, Ord b, Ord a);
Ord psi_sd(Ord pi, const CoeffSeq& nu, Ord a);

// omega_0(a) = a, omega_{n+1}(a) = omega^{omega_n(a)}.
Ord omega_tower(Ord a, int n);
// psi_{Omega_1}(omega_n(K + 1)).
Ord theorem_bound(Universe& u, int n);

}  // namespace otn

#endif  // OTN_ARITH_HPP_
