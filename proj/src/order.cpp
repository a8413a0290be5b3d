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

#include "otn/order.hpp"

#include <algorithm>

#include "caches.hpp"
#include "otn/cnf.hpp"
#include "otn/validate.hpp"

namespace otn {

char cmp_symbol(Cmp c) {
  switch (c) {
    case Cmp::LT: return '<';
    case Cmp::EQ: return '=';
    case Cmp::GT: return '>';
  }
  return '?';
}

bool strongly_critical(Ord t) {
  switch (t.kind()) {
    case OrdKind::BigK:
    case OrdKind::OmegaIdx:
    case OrdKind::Psi:
      return true;
    default:
      return false;
  }
}

bool omega_fixed_point(Ord t) {
  if (!t.is_psi()) return false;
  Ord base = t.psi_base();
  return base.is_big_k() || base.is_psi();
}

namespace {

// 0 below K, 1 for K itself, 2 above K.
int zone(Ord t) {
  switch (t.kind()) {
    case OrdKind::BigK: return 1;
    case OrdKind::OmegaExp: return 2;
    default: return 0;
  }
}

Cmp from_less(bool less) { return less ? Cmp::LT : Cmp::GT; }

bool psi_less(Ord s, Ord t);

Cmp compare_principal(Ord s, Ord t) {
  int zs = zone(s), zt = zone(t);
  if (zs != zt) return zs < zt ? Cmp::LT : Cmp::GT;
  if (zs == 2) return compare(s.operand(), t.operand());
  if (zs == 1) return Cmp::EQ;

  OrdKind ks = s.kind(), kt = t.kind();
  if (ks == OrdKind::Veblen && kt == OrdKind::Veblen) {
    Ord b1 = s.veblen_level(), g1 = s.veblen_arg();
    Ord b2 = t.veblen_level(), g2 = t.veblen_arg();
    Cmp cb = compare(b1, b2);
    if (cb == Cmp::EQ) return compare(g1, g2);
    if (cb == Cmp::LT) return from_less(compare(g1, t) == Cmp::LT);
    return from_less(compare(s, g2) != Cmp::GT);
  }
  if (ks == OrdKind::Veblen) {
    return from_less(lt(s.veblen_level(), t) && lt(s.veblen_arg(), t));
  }
  if (kt == OrdKind::Veblen) {
    return flip(compare_principal(t, s));
  }
  if (ks == OrdKind::OmegaIdx && kt == OrdKind::OmegaIdx) {
    return compare(s.operand(), t.operand());
  }
  if (ks == OrdKind::OmegaIdx) {
    Ord base = t.psi_base();
    if (base.kind() == OrdKind::OmegaIdx) {
      // Omega_sigma' < psi_{Omega_sigma}(a) < Omega_sigma for sigma =
      // sigma' + 1.
      return from_less(lt(s.operand(), base.operand()));
    }
    return from_less(lt(s.operand(), t));
  }
  if (kt == OrdKind::OmegaIdx) return flip(compare_principal(t, s));
  return from_less(psi_less(s, t));
}

bool psi_less_uncached(Ord s, Ord t) {
  // s = psi_pi^nu(b), t = psi_kappa^xi(a).
  Ord pi = s.psi_base(), b = s.psi_stage();
  Ord kappa = t.psi_base(), a = t.psi_stage();
  const CoeffSeq& nu = s.psi_coeffs();
  const CoeffSeq& xi = t.psi_coeffs();

  if (le(pi, t)) return true;

  Cmp ba = compare(b, a);
  if (ba == Cmp::LT && lt(s, kappa)) {
    KSet args = components(nu);
    args.insert(pi);
    args.insert(b);
    if (all_below(k_delta(t, args), a)) return true;
  }
  if (ba != Cmp::LT) {
    KSet args = components(xi);
    args.insert(kappa);
    args.insert(a);
    if (some_at_least(k_delta(s, args), b)) return true;
  }
  if (ba == Cmp::EQ && pi == kappa) {
    if (all_below(k_delta(t, components(nu)), a) && lx_lt(nu, xi, 2)) {
      return true;
    }
  }
  return false;
}

bool psi_less(Ord s, Ord t) {
  auto& memo = s.universe().caches().psi_less;
  std::uint64_t key = detail::pair_key(s.id(), t.id());
  if (auto hit = memo.find(key)) return *hit;
  bool r = psi_less_uncached(s, t);
  memo.insert(key, r);
  return r;
}

}  // namespace

Cmp compare(Ord s, Ord t) {
  if (s == t) return Cmp::EQ;
  if (s.is_zero()) return Cmp::LT;
  if (t.is_zero()) return Cmp::GT;
  if (s.is_principal() && t.is_principal()) return compare_principal(s, t);
  auto ps = s.parts();
  auto pt = t.parts();
  std::size_t n = std::min(ps.size(), pt.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = compare(ps[i], pt[i]);
    if (c != Cmp::EQ) return c;
  }
  if (ps.size() == pt.size()) return Cmp::EQ;
  return ps.size() < pt.size() ? Cmp::LT : Cmp::GT;
}

Cmp compare(Exp x, Exp y) {
  if (x == y) return Cmp::EQ;
  auto xs = x.summands();
  auto ys = y.summands();
  std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp c = compare(xs[i].exponent, ys[i].exponent);
    if (c != Cmp::EQ) return c;
    c = compare(xs[i].coeff, ys[i].coeff);
    if (c != Cmp::EQ) return c;
  }
  if (xs.size() == ys.size()) return Cmp::EQ;
  return xs.size() < ys.size() ? Cmp::LT : Cmp::GT;
}

Cmp cmp_ord(Ord s, Ord t) {
  if (&s.universe() != &t.universe()) {
    throw Error(ErrorKind::MixedUniverse, "terms from different universes");
  }
  require_valid(s);
  require_valid(t);
  return compare(s, t);
}

Cmp cmp_exp(Exp x, Exp y) {
  if (&x.universe() != &y.universe()) {
    throw Error(ErrorKind::MixedUniverse, "terms from different universes");
  }
  require_valid(x);
  require_valid(y);
  return compare(x, y);
}

void sort_by_order(std::vector<Ord>& terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](Ord a, Ord b) { return lt(a, b); });
}

}  // namespace otn
