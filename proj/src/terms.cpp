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

#include "otn/terms.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>

#include "caches.hpp"

namespace otn {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::MixedUniverse: return "MixedUniverse";
    case ErrorKind::MalformedChain: return "MalformedChain";
    case ErrorKind::UndefinedOnZero: return "UndefinedOnZero";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::UnvalidatedInput: return "UnvalidatedInput";
    case ErrorKind::BadDelta: return "BadDelta";
    case ErrorKind::NotMahloTerm: return "NotMahloTerm";
    case ErrorKind::ArgsNotBelowK: return "ArgsNotBelowK";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::InvalidTerm: return "InvalidTerm";
  }
  return "Unknown";
}

struct OrdNode {
  Universe* universe;
  std::uint32_t id;
  std::uint32_t size;
  OrdKind kind;
  PsiForm form;
  std::vector<Ord> kids;
  CoeffSeq coeffs;
  Ord self;
};

struct ExpNode {
  Universe* universe;
  std::uint32_t id;
  std::uint32_t size;
  ExpKind kind;
  std::vector<LamTerm> summands;
};

struct Universe::Interner {
  std::mutex mu;
  std::deque<OrdNode> ords;
  std::deque<ExpNode> exps;
  std::unordered_map<std::vector<std::uint32_t>, const OrdNode*,
                     detail::VecHash>
      ord_index;
  std::unordered_map<std::vector<std::uint32_t>, const ExpNode*,
                     detail::VecHash>
      exp_index;
  const OrdNode* zero = nullptr;
  const OrdNode* big_k = nullptr;
  const OrdNode* one = nullptr;
  const ExpNode* exp_zero = nullptr;
};

// ---------------------------------------------------------------------------
// Ord accessors

OrdKind Ord::kind() const { return node_->kind; }

bool Ord::is_principal() const {
  return node_->kind != OrdKind::Zero && node_->kind != OrdKind::Sum;
}

std::span<const Ord> Ord::parts() const {
  switch (node_->kind) {
    case OrdKind::Zero:
      return {};
    case OrdKind::Sum:
      return node_->kids;
    default:
      return std::span<const Ord>(&node_->self, 1);
  }
}

Ord Ord::veblen_level() const { return node_->kids[0]; }
Ord Ord::veblen_arg() const { return node_->kids[1]; }
Ord Ord::operand() const { return node_->kids[0]; }
Ord Ord::psi_base() const { return node_->kids[0]; }
Ord Ord::psi_stage() const { return node_->kids[1]; }
const CoeffSeq& Ord::psi_coeffs() const { return node_->coeffs; }
PsiForm Ord::psi_form() const { return node_->form; }
std::uint32_t Ord::id() const { return node_->id; }
std::uint32_t Ord::size() const { return node_->size; }
Universe& Ord::universe() const { return *node_->universe; }

// ---------------------------------------------------------------------------
// Exp accessors

std::span<const LamTerm> Exp::summands() const { return node_->summands; }
ExpKind Exp::kind() const { return node_->kind; }
bool Exp::is_zero() const { return node_->summands.empty(); }

bool Exp::below_lambda() const {
  return node_->kind == ExpKind::Zero || node_->kind == ExpKind::Ord;
}

Ord Exp::as_ord() const {
  if (node_->kind == ExpKind::Zero) return node_->universe->zero();
  if (node_->kind != ExpKind::Ord) {
    throw Error(ErrorKind::OutOfRange, "exponent term is not below Lambda");
  }
  return node_->summands.front().coeff;
}

bool Exp::is_e_shape() const { return node_->kind != ExpKind::Mixed; }
std::uint32_t Exp::id() const { return node_->id; }
std::uint32_t Exp::size() const { return node_->size; }
Universe& Exp::universe() const { return *node_->universe; }

// ---------------------------------------------------------------------------
// CoeffSeq

Exp CoeffSeq::at(int k) const {
  if (k < first_index() || k > last_index()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "coefficient index " + std::to_string(k) + " outside 2.." +
                    std::to_string(last_index()));
  }
  return entries_[static_cast<std::size_t>(k - 2)];
}

std::span<const Exp> CoeffSeq::from(int k) const {
  if (k < first_index() || k > last_index() + 1) {
    throw Error(ErrorKind::IndexOutOfRange,
                "coefficient index " + std::to_string(k) + " out of range");
  }
  return std::span<const Exp>(entries_).subspan(
      static_cast<std::size_t>(k - 2));
}

bool CoeffSeq::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Exp e) { return e.is_zero(); });
}

std::optional<int> CoeffSeq::first_nonzero() const {
  for (int i = 0; i < size(); ++i) {
    if (!entries_[i].is_zero()) return i + 2;
  }
  return std::nullopt;
}

std::optional<int> CoeffSeq::last_nonzero() const {
  for (int i = size() - 1; i >= 0; --i) {
    if (!entries_[i].is_zero()) return i + 2;
  }
  return std::nullopt;
}

CoeffSeq CoeffSeq::with(int k, Exp value) const {
  (void)at(k);
  CoeffSeq out = *this;
  out.entries_[static_cast<std::size_t>(k - 2)] = value;
  return out;
}

// ---------------------------------------------------------------------------
// KSet

namespace {
bool by_id(Ord a, Ord b) { return a.id() < b.id(); }
}  // namespace

void KSet::insert(Ord t) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), t, by_id);
  if (it == elems_.end() || !(*it == t)) elems_.insert(it, t);
}

void KSet::merge(const KSet& other) {
  if (other.elems_.empty()) return;
  std::vector<Ord> out;
  out.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(out), by_id);
  elems_ = std::move(out);
}

bool KSet::contains(Ord t) const {
  return std::binary_search(elems_.begin(), elems_.end(), t, by_id);
}

// ---------------------------------------------------------------------------
// Universe

namespace {

std::uint32_t ord_size(OrdKind kind, const std::vector<Ord>& kids,
                       const CoeffSeq& coeffs) {
  switch (kind) {
    case OrdKind::Zero:
    case OrdKind::BigK:
      return 1;
    case OrdKind::Sum: {
      std::uint32_t s = static_cast<std::uint32_t>(kids.size()) - 1;
      for (Ord p : kids) s += p.size();
      return s;
    }
    case OrdKind::Veblen:
      return 1 + kids[0].size() + kids[1].size();
    case OrdKind::OmegaExp:
    case OrdKind::OmegaIdx:
      return 1 + kids[0].size();
    case OrdKind::Psi: {
      std::uint32_t s = 1 + kids[0].size() + kids[1].size();
      for (Exp e : coeffs.entries()) {
        if (!e.is_zero()) s += e.size();
      }
      return s;
    }
  }
  return 0;
}

std::uint32_t exp_size(const std::vector<LamTerm>& summands) {
  if (summands.empty()) return 1;
  std::uint32_t s = static_cast<std::uint32_t>(summands.size()) - 1;
  for (const LamTerm& t : summands) {
    if (t.exponent.is_zero()) {
      s += t.coeff.size();
    } else {
      s += 1 + t.exponent.size() + t.coeff.size();
    }
  }
  return s;
}

ExpKind exp_kind(const std::vector<LamTerm>& summands) {
  if (summands.empty()) return ExpKind::Zero;
  if (summands.size() == 1 && summands[0].exponent.is_zero()) {
    return ExpKind::Ord;
  }
  for (const LamTerm& t : summands) {
    if (t.exponent.is_zero()) return ExpKind::Mixed;
    if (!t.exponent.is_e_shape()) return ExpKind::Mixed;
  }
  return ExpKind::LamSum;
}

}  // namespace

Universe::Universe(SystemParams params)
    : params_(params),
      interner_(std::make_unique<Interner>()),
      caches_(std::make_unique<detail::Caches>()) {
  if (params_.n < 3) {
    throw Error(ErrorKind::OutOfRange, "reflection degree N must be >= 3");
  }
  auto& in = *interner_;
  auto add_leaf = [&](OrdKind kind) {
    in.ords.push_back(OrdNode{this, static_cast<std::uint32_t>(in.ords.size()),
                              1, kind, PsiForm::Plain, {}, {}, Ord()});
    OrdNode& node = in.ords.back();
    node.self = Ord(&node);
    in.ord_index.emplace(
        std::vector<std::uint32_t>{static_cast<std::uint32_t>(kind)}, &node);
    return &node;
  };
  in.zero = add_leaf(OrdKind::Zero);
  in.big_k = add_leaf(OrdKind::BigK);
  in.exps.push_back(ExpNode{this, 0, 1, ExpKind::Zero, {}});
  in.exp_zero = &in.exps.back();
  in.exp_index.emplace(std::vector<std::uint32_t>{}, in.exp_zero);
  in.one = make_veblen(zero(), zero()).node();
}

Universe::~Universe() = default;

Ord Universe::zero() { return Ord(interner_->zero); }
Ord Universe::big_k() { return Ord(interner_->big_k); }
Ord Universe::one() { return Ord(interner_->one); }

Ord Universe::finite(unsigned k) {
  if (k == 0) return zero();
  if (k == 1) return one();
  return make_sum(std::vector<Ord>(k, one()));
}

Exp Universe::exp_zero() { return Exp(interner_->exp_zero); }

Exp Universe::exp_ord(Ord a) {
  if (a.is_zero()) return exp_zero();
  return exp_cnf({LamTerm{exp_zero(), a}});
}

Exp Universe::exp_power(Exp exponent, Ord coeff) {
  if (coeff.is_zero()) return exp_zero();
  return exp_cnf({LamTerm{exponent, coeff}});
}

Exp Universe::exp_cnf(std::vector<LamTerm> summands) {
  std::vector<std::uint32_t> key;
  key.reserve(summands.size() * 2);
  for (const LamTerm& t : summands) {
    if (!t.exponent || !t.coeff) {
      throw Error(ErrorKind::Malformed, "null component in exponent term");
    }
    if (&t.exponent.universe() != this || &t.coeff.universe() != this) {
      throw Error(ErrorKind::MixedUniverse, "exponent term mixes universes");
    }
    if (t.coeff.is_zero()) {
      throw Error(ErrorKind::Malformed, "zero coefficient in Lambda-CNF");
    }
    key.push_back(t.exponent.id());
    key.push_back(t.coeff.id());
  }
  std::lock_guard<std::mutex> lock(interner_->mu);
  auto it = interner_->exp_index.find(key);
  if (it != interner_->exp_index.end()) return Exp(it->second);
  auto& exps = interner_->exps;
  ExpKind kind = exp_kind(summands);
  std::uint32_t size = exp_size(summands);
  exps.push_back(ExpNode{this, static_cast<std::uint32_t>(exps.size()), size,
                         kind, std::move(summands)});
  const ExpNode* node = &exps.back();
  interner_->exp_index.emplace(std::move(key), node);
  return Exp(node);
}

CoeffSeq Universe::zero_seq() {
  return CoeffSeq(std::vector<Exp>(static_cast<std::size_t>(params_.seq_len()),
                                   exp_zero()));
}

namespace {

struct NodeSpec {
  OrdKind kind;
  PsiForm form = PsiForm::Plain;
  std::vector<Ord> kids;
  CoeffSeq coeffs;
};

}  // namespace

static Ord intern_ord(Universe* u, std::mutex& mu, std::deque<OrdNode>& ords,
                      std::unordered_map<std::vector<std::uint32_t>,
                                         const OrdNode*, detail::VecHash>& index,
                      NodeSpec spec) {
  std::vector<std::uint32_t> key;
  key.push_back(static_cast<std::uint32_t>(spec.kind) |
                (static_cast<std::uint32_t>(spec.form) << 8));
  for (Ord k : spec.kids) {
    if (!k) throw Error(ErrorKind::Malformed, "null subterm");
    if (&k.universe() != u) {
      throw Error(ErrorKind::MixedUniverse, "ordinal term mixes universes");
    }
    key.push_back(k.id());
  }
  for (Exp e : spec.coeffs.entries()) {
    if (!e) throw Error(ErrorKind::Malformed, "null coefficient");
    if (&e.universe() != u) {
      throw Error(ErrorKind::MixedUniverse, "coefficient mixes universes");
    }
    key.push_back(0x80000000u | e.id());
  }
  std::lock_guard<std::mutex> lock(mu);
  auto it = index.find(key);
  if (it != index.end()) return Ord(it->second);
  std::uint32_t size = ord_size(spec.kind, spec.kids, spec.coeffs);
  ords.push_back(OrdNode{u, static_cast<std::uint32_t>(ords.size()), size,
                         spec.kind, spec.form, std::move(spec.kids),
                         std::move(spec.coeffs), Ord()});
  OrdNode& node = ords.back();
  node.self = Ord(&node);
  index.emplace(std::move(key), &node);
  return Ord(&node);
}

Ord Universe::make_sum(std::vector<Ord> parts) {
  if (parts.size() < 2) {
    throw Error(ErrorKind::Malformed, "a sum needs at least two parts");
  }
  for (Ord p : parts) {
    if (!p || !p.is_principal()) {
      throw Error(ErrorKind::Malformed, "sum parts must be principal terms");
    }
  }
  return intern_ord(this, interner_->mu, interner_->ords, interner_->ord_index,
                    NodeSpec{OrdKind::Sum, PsiForm::Plain, std::move(parts), {}});
}

Ord Universe::make_veblen(Ord level, Ord arg) {
  return intern_ord(this, interner_->mu, interner_->ords, interner_->ord_index,
                    NodeSpec{OrdKind::Veblen, PsiForm::Plain, {level, arg}, {}});
}

Ord Universe::make_omega_exp(Ord exponent) {
  return intern_ord(this, interner_->mu, interner_->ords, interner_->ord_index,
                    NodeSpec{OrdKind::OmegaExp, PsiForm::Plain, {exponent}, {}});
}

Ord Universe::make_omega_idx(Ord index) {
  return intern_ord(this, interner_->mu, interner_->ords, interner_->ord_index,
                    NodeSpec{OrdKind::OmegaIdx, PsiForm::Plain, {index}, {}});
}

Ord Universe::make_psi(Ord base, CoeffSeq coeffs, Ord stage, PsiForm form) {
  if (coeffs.size() != params_.seq_len()) {
    throw Error(ErrorKind::ArityError,
                "psi coefficient sequence has length " +
                    std::to_string(coeffs.size()) + ", expected " +
                    std::to_string(params_.seq_len()));
  }
  if (!coeffs.is_zero()) form = PsiForm::Indexed;
  return intern_ord(this, interner_->mu, interner_->ords, interner_->ord_index,
                    NodeSpec{OrdKind::Psi, form, {base, stage}, std::move(coeffs)});
}

std::size_t Universe::node_count() const {
  std::lock_guard<std::mutex> lock(interner_->mu);
  return interner_->ords.size() + interner_->exps.size();
}

void Universe::clear_caches() { caches_->clear(); }

// ---------------------------------------------------------------------------
// Structural operations

std::uint32_t term_size(Ord t) { return t.size(); }
std::uint32_t term_size(Exp x) { return x.size(); }

std::optional<Ord> pd(Ord t) {
  if (t.is_psi()) return t.psi_base();
  return std::nullopt;
}

std::optional<Ord> pd_iter(Ord t, int k) {
  std::optional<Ord> cur = t;
  for (int i = 0; i < k && cur; ++i) cur = pd(*cur);
  return cur;
}

std::vector<Ord> collapsing_series(Ord t) {
  if (!t.is_psi()) {
    throw Error(ErrorKind::MalformedChain, "collapsing series of a non-psi term");
  }
  std::vector<Ord> chain{t};
  Ord cur = t;
  while (!cur.is_big_k()) {
    auto next = pd(cur);
    if (!next) {
      throw Error(ErrorKind::MalformedChain,
                  "predecessor chain stops before reaching K");
    }
    cur = *next;
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool prec(Ord s, Ord t) {
  std::optional<Ord> cur = pd(s);
  while (cur) {
    if (*cur == t) return true;
    cur = pd(*cur);
  }
  return false;
}

bool prec_eq(Ord s, Ord t) { return s == t || prec(s, t); }

bool is_successor(Ord t) {
  auto parts = t.parts();
  if (parts.empty()) return false;
  return parts.back() == t.universe().one();
}

}  // namespace otn
