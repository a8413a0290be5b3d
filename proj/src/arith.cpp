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

#include "otn/arith.hpp"

#include <algorithm>

#include "internal.hpp"
#include "otn/cnf.hpp"
#include "otn/order.hpp"
#include "otn/validate.hpp"

namespace otn {

namespace detail {

Ord add_parts(Ord a, Ord b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  Ord head = b.parts().front();
  std::vector<Ord> parts;
  for (Ord p : a.parts()) {
    if (lt(p, head)) break;
    parts.push_back(p);
  }
  for (Ord p : b.parts()) parts.push_back(p);
  if (parts.size() == 1) return parts[0];
  return a.universe().make_sum(std::move(parts));
}

std::optional<Ord> left_subtract(Ord c, Ord d) {
  auto parts = d.parts();
  Universe& u = d.universe();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Ord> rest(parts.begin() + static_cast<std::ptrdiff_t>(i),
                          parts.end());
    Ord b = rest.size() == 1 ? rest[0] : u.make_sum(rest);
    if (add_parts(c, b) == d) return b;
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

Ord checked(Ord t) {
  auto r = check_ot(t);
  if (!r->ok) throw_invalid(t, *r);
  return t;
}

}  // namespace

Ord add(Ord a, Ord b) {
  require_valid(a);
  require_valid(b);
  return checked(detail::add_parts(a, b));
}

Ord natural_sum(Ord a, Ord b) {
  require_valid(a);
  require_valid(b);
  std::vector<Ord> parts;
  auto pa = a.parts(), pb = b.parts();
  std::merge(pa.begin(), pa.end(), pb.begin(), pb.end(),
             std::back_inserter(parts), [](Ord x, Ord y) { return lt(y, x); });
  if (parts.empty()) return a.universe().zero();
  if (parts.size() == 1) return parts[0];
  return checked(a.universe().make_sum(std::move(parts)));
}

Ord veblen(Ord b, Ord g) {
  require_valid(b);
  require_valid(g);
  Universe& u = b.universe();
  if (!lt(b, u.big_k()) || !lt(g, u.big_k())) {
    throw Error(ErrorKind::ArgsNotBelowK, "phi arguments must lie below K");
  }
  if (g.kind() == OrdKind::Veblen && lt(b, g.veblen_level())) return g;
  if (strongly_critical(g) && lt(b, g)) return g;
  if (g.is_zero() && strongly_critical(b)) return b;
  return checked(u.make_veblen(b, g));
}

Ord omega_exp(Ord b) {
  require_valid(b);
  Universe& u = b.universe();
  Cmp c = compare(b, u.big_k());
  if (c == Cmp::GT) return checked(u.make_omega_exp(b));
  if (c == Cmp::EQ) return b;
  if (b.is_zero()) return u.one();
  return veblen(u.zero(), b);
}

Ord omega_idx(Ord b) {
  require_valid(b);
  Universe& u = b.universe();
  if (b.is_zero() || !lt(b, u.big_k())) {
    throw Error(ErrorKind::OutOfRange, "Omega index must satisfy 0 < b < K");
  }
  if (omega_fixed_point(b)) return b;
  return checked(u.make_omega_idx(b));
}

Ord psi(Ord pi, const CoeffSeq& nu, Ord a) {
  return checked(pi.universe().make_psi(pi, nu, a));
}

Ord psi0(Ord pi, Ord a) {
  return psi(pi, pi.universe().zero_seq(), a);
}

Ord psiK(Ord b, Ord a) {
  Universe& u = b.universe();
  CoeffSeq nu = u.zero_seq().with(u.params().last_index(), u.exp_ord(b));
  return checked(u.make_psi(u.big_k(), nu, a, PsiForm::Indexed));
}

Ord psi_step(Ord pi, Ord b, Ord a) {
  require_valid(pi);
  Universe& u = pi.universe();
  std::optional<CoeffSeq> m = m_vec(pi);
  std::optional<int> j = m ? m->last_nonzero() : std::nullopt;
  if (!m || !j || *j < 3) {
    throw Error(ErrorKind::InvalidTerm,
                "psi_step needs pi < K whose last nonzero m-entry has index >= 3");
  }
  const int k = *j - 1;
  CoeffSeq nu = *m;
  nu = nu.with(k, exp_add(m->at(k), u.exp_power(m->at(k + 1), b)));
  for (int i = k + 1; i <= nu.last_index(); ++i) nu = nu.with(i, u.exp_zero());
  return psi(pi, nu, a);
}

Ord psi_sd(Ord pi, const CoeffSeq& nu, Ord a) {
  return checked(pi.universe().make_psi(pi, nu, a, PsiForm::Indexed));
}

Ord omega_tower(Ord a, int n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "negative tower height");
  require_valid(a);
  for (int i = 0; i < n; ++i) a = omega_exp(a);
  return a;
}

Ord theorem_bound(Universe& u, int n) {
  Ord k1 = add(u.big_k(), u.one());
  return psi0(omega_idx(u.one()), omega_tower(k1, n));
}

}  // namespace otn
