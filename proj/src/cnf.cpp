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

#include "otn/cnf.hpp"

#include <algorithm>
#include <string>

#include "otn/order.hpp"

namespace otn {

namespace {

Universe& uni(Exp x) { return x.universe(); }

Exp from_summands(Universe& u, std::span<const LamTerm> s) {
  return u.exp_cnf(std::vector<LamTerm>(s.begin(), s.end()));
}

void collect(Exp x, KSet& out) {
  for (const LamTerm& t : x.summands()) {
    out.insert(t.coeff);
    collect(t.exponent, out);
  }
}

}  // namespace

KSet components(Exp x) {
  KSet out;
  collect(x, out);
  return out;
}

KSet components(std::span<const Exp> xs) {
  KSet out;
  for (Exp x : xs) collect(x, out);
  return out;
}

KSet components(const CoeffSeq& xs) { return components(xs.entries()); }

HeadTail head_tail(Exp x) {
  if (x.is_zero()) {
    throw Error(ErrorKind::UndefinedOnZero, "head/tail of 0");
  }
  auto s = x.summands();
  Universe& u = uni(x);
  return HeadTail{s.front().exponent, s.back().exponent,
                  from_summands(u, s.first(1)), from_summands(u, s.last(1))};
}

Exp he(Exp x) {
  if (x.is_zero()) throw Error(ErrorKind::UndefinedOnZero, "he(0)");
  return x.summands().front().exponent;
}

Exp te(Exp x) {
  if (x.is_zero()) throw Error(ErrorKind::UndefinedOnZero, "te(0)");
  return x.summands().back().exponent;
}

Exp hd(Exp x) { return head_tail(x).hd; }
Exp tl(Exp x) { return head_tail(x).tl; }

std::optional<Exp> he_iter(Exp x, int i) {
  for (int j = 0; j < i; ++j) {
    if (x.is_zero()) return std::nullopt;
    x = he(x);
  }
  return x;
}

std::optional<Exp> te_iter(Exp x, int i) {
  for (int j = 0; j < i; ++j) {
    if (x.is_zero()) return std::nullopt;
    x = te(x);
  }
  return x;
}

Exp drop_tail(Exp x) {
  if (x.is_zero()) return x;
  auto s = x.summands();
  return from_summands(uni(x), s.first(s.size() - 1));
}

Exp exp_add(Exp x, Exp y) {
  if (y.is_zero()) return x;
  if (x.is_zero()) return y;
  auto ys = y.summands();
  const LamTerm& head = ys.front();
  std::vector<LamTerm> out;
  for (const LamTerm& t : x.summands()) {
    Cmp c = compare(t.exponent, head.exponent);
    if (c == Cmp::LT) break;
    out.push_back(t);
  }
  std::size_t rest = 0;
  if (!out.empty() && out.back().exponent == head.exponent) {
    // Same power of Lambda: coefficients add as ordinals. The coefficient
    // sum of two ordinal terms is an ordinal sum of CNF parts.
    std::vector<Ord> parts;
    Ord c0 = out.back().coeff;
    Ord c1 = head.coeff;
    Ord hb = c1.parts().front();
    for (Ord p : c0.parts()) {
      if (lt(p, hb)) break;
      parts.push_back(p);
    }
    for (Ord p : c1.parts()) parts.push_back(p);
    Universe& u = uni(x);
    out.back().coeff = parts.size() == 1 ? parts[0] : u.make_sum(parts);
    rest = 1;
  }
  for (std::size_t i = rest; i < ys.size(); ++i) out.push_back(ys[i]);
  return uni(x).exp_cnf(std::move(out));
}

Exp exp_succ(Exp x) {
  Universe& u = uni(x);
  return exp_add(x, u.exp_ord(u.one()));
}

bool is_part(Exp z, Exp x) {
  auto zs = z.summands();
  auto xs = x.summands();
  if (zs.size() > xs.size()) return false;
  return std::equal(zs.begin(), zs.end(), xs.begin());
}

bool is_proper_part(Exp z, Exp x) { return !(z == x) && is_part(z, x); }

std::vector<Exp> parts_of(Exp x) {
  std::vector<Exp> out;
  auto xs = x.summands();
  for (std::size_t n = 0; n <= xs.size(); ++n) {
    out.push_back(from_summands(uni(x), xs.first(n)));
  }
  return out;
}

std::vector<Exp> strip_zeros(std::span<const Exp> xs) {
  std::size_t n = xs.size();
  while (n > 1 && xs[n - 1].is_zero()) --n;
  return std::vector<Exp>(xs.begin(), xs.begin() + n);
}

bool iterated_tail_parts(std::span<const Exp> mu, Exp x) {
  if (mu.empty()) return true;
  if (!is_part(mu[0], x)) return false;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    if (mu[i].is_zero()) return false;
    if (!is_part(mu[i + 1], te(mu[i]))) return false;
  }
  return true;
}

namespace {

bool seq_lt_from(std::span<const Exp> nu, std::size_t i, Exp host) {
  if (i == nu.size()) return true;
  for (Exp mu : parts_of(host)) {
    if (!lt(nu[i], mu)) continue;
    if (i + 1 == nu.size()) return true;
    if (seq_lt_from(nu, i + 1, te(mu))) return true;
  }
  return false;
}

}  // namespace

bool seq_lt(std::span<const Exp> nu, Exp x) {
  std::vector<Exp> v = strip_zeros(nu);
  if (v.empty()) return true;
  return seq_lt_from(v, 0, x);
}

bool seq_lt_k(const CoeffSeq& nu, const CoeffSeq& xi, int k) {
  if (nu.size() != xi.size()) {
    throw Error(ErrorKind::LengthMismatch, "sequences differ in length");
  }
  Exp xk = xi.at(k);
  for (int i = nu.first_index(); i < k; ++i) {
    if (!le(nu.at(i), xi.at(i))) return false;
  }
  return seq_lt(nu.from(k), xk);
}

bool step_down(Exp z, Exp x) {
  if (x.is_zero()) return false;
  auto xs = x.summands();
  auto zs = z.summands();
  std::size_t m = xs.size() - 1;
  if (zs.size() < m) return false;
  if (!std::equal(xs.begin(), xs.begin() + m, zs.begin())) return false;
  Universe& u = uni(x);
  Exp rest = from_summands(u, zs.subspan(m));
  Exp last = from_summands(u, xs.subspan(m));
  return lt(rest, last);
}

bool step_down_eq(Exp z, Exp x) { return z == x || step_down(z, x); }

bool vec_step_down(std::span<const Exp> nu, Exp x) {
  std::vector<Exp> v = strip_zeros(nu);
  Exp cur = x;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      if (cur.is_zero()) return false;
      cur = te(cur);
    }
    if (!step_down(v[i], cur)) return false;
  }
  return true;
}

bool sp_rel(Exp z, Exp x, bool strict) {
  for (Exp mu : parts_of(x)) {
    if (strict ? step_down(z, mu) : step_down_eq(z, mu)) return true;
  }
  return false;
}

bool vec_sp(std::span<const Exp> nu, Exp x) {
  for (Exp mu : parts_of(x)) {
    if (vec_step_down(nu, mu)) return true;
  }
  return false;
}

int sp_position(std::span<const Exp> nu, Exp x) {
  auto parts = parts_of(x);
  int total = static_cast<int>(x.summands().size());
  for (int n = total; n >= 0; --n) {
    if (vec_step_down(nu, parts[static_cast<std::size_t>(n)])) {
      return total - n;
    }
  }
  throw Error(ErrorKind::NoWitness, "no part of the exponent admits the step-down");
}

bool lx_lt(const CoeffSeq& nu, const CoeffSeq& xi, int k) {
  if (nu.size() != xi.size()) {
    throw Error(ErrorKind::LengthMismatch, "sequences differ in length");
  }
  const int last = nu.last_index();
  (void)nu.at(k);
  int i = k;
  while (i <= last && nu.at(i) == xi.at(i)) ++i;
  if (i > last) return false;
  auto first_nonzero_from = [&](const CoeffSeq& s) -> std::optional<int> {
    for (int j = i; j <= last; ++j) {
      if (!s.at(j).is_zero()) return j;
    }
    return std::nullopt;
  };
  std::optional<int> k1 = first_nonzero_from(xi);
  if (!k1) return false;
  std::optional<int> k0 = first_nonzero_from(nu);
  if (!k0) return true;
  if (i == *k0 && *k0 < *k1) {
    auto h = he_iter(nu.at(*k0), *k1 - *k0);
    return h && le(*h, xi.at(*k1));
  }
  if (*k0 >= *k1 && *k1 == i) {
    auto h = he_iter(xi.at(*k1), *k0 - *k1);
    return h && lt(nu.at(*k0), *h);
  }
  return false;
}

Exp lam_tower(Exp x, int i, int cap) {
  if (i < 0) throw Error(ErrorKind::OutOfRange, "negative tower height");
  if (i > cap) {
    throw Error(ErrorKind::CapExceeded,
                "tower height " + std::to_string(i) + " exceeds cap " +
                    std::to_string(cap));
  }
  Universe& u = uni(x);
  for (int j = 0; j < i; ++j) x = u.exp_power(x, u.one());
  return x;
}

namespace {

// First (i, k) violating irreducibility, scanning i upwards.
std::optional<int> first_violation(const CoeffSeq& xi) {
  const int first = xi.first_index();
  const int last = xi.last_index();
  for (int i = first; i <= last; ++i) {
    Exp xi_i = xi.at(i);
    if (xi_i.is_zero()) continue;
    Exp t = tl(xi_i);
    for (int k = 1; i + k <= last; ++k) {
      Exp bound = lam_tower(exp_succ(xi.at(i + k)), k);
      if (lt(t, bound)) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

bool irreducible(const CoeffSeq& xi) { return !first_violation(xi); }

CoeffSeq irreducible_reduct(const CoeffSeq& xi) {
  CoeffSeq cur = xi;
  while (auto i = first_violation(cur)) {
    cur = cur.with(*i, drop_tail(cur.at(*i)));
  }
  return cur;
}

}  // namespace otn
