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

// Term grammars for ordinal terms (below Lambda = eps_{K+1}) and exponent
// terms (below eps(Lambda)), both hash-consed inside a Universe.
//
// A Universe fixes the reflection degree N and owns every node built for it.
// Handles (Ord, Exp) are pointer-sized and compare by identity, so structural
// equality of terms is pointer equality.

#ifndef OTN_TERMS_HPP_
#define OTN_TERMS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "otn/errors.hpp"

namespace otn {

class Universe;
struct OrdNode;
struct ExpNode;
class CoeffSeq;

struct SystemParams {
  int n = 4;

  // Coefficient sequences carry logical indices 2..n-1.
  int seq_len() const { return n - 2; }
  int first_index() const { return 2; }
  int last_index() const { return n - 1; }
};

enum class OrdKind : std::uint8_t {
  Zero,
  BigK,
  Sum,
  Veblen,
  OmegaExp,
  OmegaIdx,
  Psi,
};

// How the coefficient sequence of a psi-term was written. Only meaningful
// for the zero sequence: an Indexed zero sequence claims one of the Mahlo
// formation rules and is therefore never valid.
enum class PsiForm : std::uint8_t { Plain, Indexed };

class Ord {
 public:
  Ord() = default;
  explicit Ord(const OrdNode* node) : node_(node) {}

  OrdKind kind() const;
  bool is_zero() const { return kind() == OrdKind::Zero; }
  bool is_big_k() const { return kind() == OrdKind::BigK; }
  bool is_sum() const { return kind() == OrdKind::Sum; }
  bool is_psi() const { return kind() == OrdKind::Psi; }
  bool is_principal() const;

  // Sum parts; a principal term is viewed as a one-element list, zero as an
  // empty list.
  std::span<const Ord> parts() const;

  Ord veblen_level() const;
  Ord veblen_arg() const;
  // Exponent of OmegaExp, index of OmegaIdx.
  Ord operand() const;

  Ord psi_base() const;
  const CoeffSeq& psi_coeffs() const;
  Ord psi_stage() const;
  PsiForm psi_form() const;

  std::uint32_t id() const;
  std::uint32_t size() const;
  Universe& universe() const;
  const OrdNode* node() const { return node_; }

  explicit operator bool() const { return node_ != nullptr; }
  friend bool operator==(Ord a, Ord b) { return a.node_ == b.node_; }

 private:
  const OrdNode* node_ = nullptr;
};

struct LamTerm;

enum class ExpKind : std::uint8_t {
  Zero,    // 0
  Ord,     // an ordinal term a > 0, i.e. Lambda^0 * a
  LamSum,  // sum of Lambda^x * b with every x > 0
  Mixed,   // intermediate value outside E (a Lambda^0 tail after a LamSum)
};

// Exponent terms are stored uniformly as base-Lambda Cantor normal forms.
// Values produced by internal arithmetic (e.g. x + 1) may fall outside the
// grammar E; is_e_shape() tells whether a value has E's shape.
class Exp {
 public:
  Exp() = default;
  explicit Exp(const ExpNode* node) : node_(node) {}

  std::span<const LamTerm> summands() const;
  ExpKind kind() const;
  bool is_zero() const;
  // True iff the value is an ordinal term (zero included), i.e. below Lambda.
  bool below_lambda() const;
  // The ordinal term of a value below Lambda (Zero for 0).
  Ord as_ord() const;
  bool is_e_shape() const;

  std::uint32_t id() const;
  std::uint32_t size() const;
  Universe& universe() const;
  const ExpNode* node() const { return node_; }

  explicit operator bool() const { return node_ != nullptr; }
  friend bool operator==(Exp a, Exp b) { return a.node_ == b.node_; }

 private:
  const ExpNode* node_ = nullptr;
};

// One summand Lambda^exponent * coeff of a base-Lambda Cantor normal form.
struct LamTerm {
  Exp exponent;
  Ord coeff;

  friend bool operator==(const LamTerm& a, const LamTerm& b) {
    return a.exponent == b.exponent && a.coeff == b.coeff;
  }
};

// Coefficient sequence (nu_2, ..., nu_{N-1}); storage position 0 is logical
// index 2.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(std::vector<Exp> entries) : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  int first_index() const { return 2; }
  int last_index() const { return 1 + size(); }

  // Logical access; throws IndexOutOfRange.
  Exp at(int k) const;
  Exp operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Exp> entries() const { return entries_; }
  // Entries with logical index >= k.
  std::span<const Exp> from(int k) const;

  bool is_zero() const;
  // Smallest / largest logical index holding a nonzero entry.
  std::optional<int> first_nonzero() const;
  std::optional<int> last_nonzero() const;

  CoeffSeq with(int k, Exp value) const;

  friend bool operator==(const CoeffSeq& a, const CoeffSeq& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Exp> entries_;
};

// Finite set of ordinal terms, kept sorted by node id.
class KSet {
 public:
  KSet() = default;

  void insert(Ord t);
  void merge(const KSet& other);
  bool contains(Ord t) const;
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Ord>& elements() const { return elems_; }

  friend bool operator==(const KSet& a, const KSet& b) {
    return a.elems_ == b.elems_;
  }

 private:
  std::vector<Ord> elems_;
};

namespace detail {
struct Caches;
}

class Universe {
 public:
  explicit Universe(SystemParams params);
  ~Universe();
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  const SystemParams& params() const { return params_; }
  int n() const { return params_.n; }

  Ord zero();
  Ord big_k();
  Ord one();
  // The finite ordinal k as a sum of k copies of phi(0,0).
  Ord finite(unsigned k);

  Exp exp_zero();
  Exp exp_ord(Ord a);
  // General base-Lambda CNF; summands must have strictly decreasing
  // exponents and nonzero coefficients (checked structurally by identity of
  // zero; ordering is checked by validation).
  Exp exp_cnf(std::vector<LamTerm> summands);
  Exp exp_power(Exp exponent, Ord coeff);

  CoeffSeq zero_seq();

  // Raw constructors. They enforce only arity/shape, never normal-form
  // conditions; see validate.hpp for membership in OT.
  Ord make_sum(std::vector<Ord> parts);
  Ord make_veblen(Ord level, Ord arg);
  Ord make_omega_exp(Ord exponent);
  Ord make_omega_idx(Ord index);
  Ord make_psi(Ord base, CoeffSeq coeffs, Ord stage,
               PsiForm form = PsiForm::Plain);

  // Number of distinct nodes interned so far.
  std::size_t node_count() const;
  void clear_caches();

  detail::Caches& caches() { return *caches_; }

 private:
  struct Interner;

  SystemParams params_;
  std::unique_ptr<Interner> interner_;
  std::unique_ptr<detail::Caches> caches_;
};

// Number of symbol occurrences from {0, K, Lambda, +, omega, phi, Omega, psi}.
// Zero entries of a coefficient sequence are not written and do not count.
std::uint32_t term_size(Ord t);
std::uint32_t term_size(Exp x);

std::optional<Ord> pd(Ord t);
std::optional<Ord> pd_iter(Ord t, int k);
// (pi_0 = K, ..., pi_L = t); throws MalformedChain.
std::vector<Ord> collapsing_series(Ord t);
// t = pd^(n)(s) for some n >= 1 (prec) or n >= 0 (prec_eq).
bool prec(Ord s, Ord t);
bool prec_eq(Ord s, Ord t);

// Successor ordinals are 1 and sums ending in 1.
bool is_successor(Ord t);

}  // namespace otn

template <>
struct std::hash<otn::Ord> {
  std::size_t operator()(otn::Ord t) const noexcept {
    return std::hash<const void*>()(t.node());
  }
};

template <>
struct std::hash<otn::Exp> {
  std::size_t operator()(otn::Exp x) const noexcept {
    return std::hash<const void*>()(x.node());
  }
};

#endif  // OTN_TERMS_HPP_
