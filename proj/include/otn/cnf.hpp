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

// Structural relations on exponent terms read off their base-Lambda Cantor
// normal forms: components, head/tail data, parts, sequence orders,
// step-downs, irreducibility and Lambda-towers.
//
// Sequence arguments given as spans are 0-based and have trailing zero
// entries stripped (keeping at least one entry) before use. CoeffSeq
// arguments use logical indices 2..N-1.

#ifndef OTN_CNF_HPP_
#define OTN_CNF_HPP_

#include <optional>
#include <span>
#include <vector>

#include "otn/terms.hpp"

namespace otn {

KSet components(Exp x);
KSet components(std::span<const Exp> xs);
KSet components(const CoeffSeq& xs);

struct HeadTail {
  Exp he;
  Exp te;
  Exp hd;
  Exp tl;
};

// All four throw UndefinedOnZero for x = 0. A value below Lambda has
// he = te = 0 and hd = tl = x.
HeadTail head_tail(Exp x);
Exp he(Exp x);
Exp te(Exp x);
Exp hd(Exp x);
Exp tl(Exp x);
// he^(i), te^(i); nullopt once an iterate would be taken of 0.
std::optional<Exp> he_iter(Exp x, int i);
std::optional<Exp> te_iter(Exp x, int i);

// x - Tl(x), i.e. x with its last summand removed (0 stays 0).
Exp drop_tail(Exp x);
// Absorbing sum x + y.
Exp exp_add(Exp x, Exp y);
Exp exp_succ(Exp x);

bool is_part(Exp z, Exp x);
bool is_proper_part(Exp z, Exp x);
// Every part of x, from 0 up to x itself.
std::vector<Exp> parts_of(Exp x);

std::vector<Exp> strip_zeros(std::span<const Exp> xs);

bool iterated_tail_parts(std::span<const Exp> mu, Exp x);
bool seq_lt(std::span<const Exp> nu, Exp x);
bool seq_lt_k(const CoeffSeq& nu, const CoeffSeq& xi, int k);

bool step_down(Exp z, Exp x);
// Reflexive closure of step_down.
bool step_down_eq(Exp z, Exp x);
bool vec_step_down(std::span<const Exp> nu, Exp x);

bool sp_rel(Exp z, Exp x, bool strict);
bool vec_sp(std::span<const Exp> nu, Exp x);
// Number of trailing summands of x outside the largest witnessing part;
// throws NoWitness.
int sp_position(std::span<const Exp> nu, Exp x);

// nu <_{lx,k} xi on entries k..N-1; throws LengthMismatch.
bool lx_lt(const CoeffSeq& nu, const CoeffSeq& xi, int k);

inline constexpr int kDefaultTowerCap = 64;
Exp lam_tower(Exp x, int i, int cap = kDefaultTowerCap);

bool irreducible(const CoeffSeq& xi);
CoeffSeq irreducible_reduct(const CoeffSeq& xi);

}  // namespace otn

#endif  // OTN_CNF_HPP_
