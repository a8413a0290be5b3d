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

#include "otn/sd.hpp"

#include <string>

#include "caches.hpp"
#include "otn/cnf.hpp"
#include "otn/order.hpp"
#include "otn/syntax.hpp"

namespace otn {

namespace {

using DerivPtr = std::shared_ptr<const SdDerivation>;

std::vector<std::uint32_t> seq_key(const CoeffSeq& xi) {
  std::vector<std::uint32_t> key;
  key.reserve(static_cast<std::size_t>(xi.size()));
  for (Exp x : xi.entries()) key.push_back(x.id());
  return key;
}

bool zero_from(const CoeffSeq& xi, int k) {
  for (int i = k; i <= xi.last_index(); ++i) {
    if (!xi.at(i).is_zero()) return false;
  }
  return true;
}

// (xi_2, ..., xi_k) * 0.
CoeffSeq truncate(const CoeffSeq& xi, int k, Universe& u) {
  CoeffSeq out = xi;
  for (int i = k + 1; i <= xi.last_index(); ++i) out = out.with(i, u.exp_zero());
  return out;
}

std::vector<Exp> tail_after(const CoeffSeq& xi, int k) {
  auto rest = xi.from(k + 1);
  return std::vector<Exp>(rest.begin(), rest.end());
}

DerivPtr search(const CoeffSeq& xi);

DerivPtr try_base(const CoeffSeq& xi) {
  for (int i = xi.first_index(); i < xi.last_index(); ++i) {
    if (!xi.at(i).is_zero()) return nullptr;
  }
  if (!xi.at(xi.last_index()).below_lambda()) return nullptr;
  auto d = std::make_shared<SdDerivation>();
  d->kind = SdDerivation::Kind::Base;
  d->result = xi;
  return d;
}

DerivPtr try_extend(const CoeffSeq& xi, int k, Universe& u) {
  Exp target = xi.at(k);
  if (target.is_zero()) return nullptr;
  const LamTerm last = target.summands().back();
  Exp zeta = last.exponent;
  if (zeta.is_zero()) return nullptr;
  Exp lower = drop_tail(target);
  CoeffSeq side_seq = truncate(xi.with(k, lower), k, u).with(k + 1, zeta);

  auto make = [&](DerivPtr premise, DerivPtr side, bool keep) {
    auto d = std::make_shared<SdDerivation>();
    d->kind = SdDerivation::Kind::Extend;
    d->result = xi;
    d->k = k;
    d->zeta = zeta;
    d->coeff = last.coeff;
    d->keep_tail = keep;
    d->premise = std::move(premise);
    d->side = std::move(side);
    return d;
  };

  if (!zero_from(xi, k + 1)) {
    if (!vec_step_down(tail_after(xi, k), zeta)) return nullptr;
    DerivPtr premise = search(xi.with(k, lower));
    if (!premise) return nullptr;
    DerivPtr side = search(side_seq);
    if (!side) return nullptr;
    return make(premise, side, true);
  }

  DerivPtr side = search(side_seq);
  if (!side) return nullptr;
  // Any premise whose tail steps down from zeta will do; two canonical
  // candidates are tried.
  CoeffSeq base = truncate(xi.with(k, lower), k, u);
  for (Exp x : {u.exp_zero(), drop_tail(zeta)}) {
    CoeffSeq cand = base.with(k + 1, x);
    if (!vec_step_down(tail_after(cand, k), zeta)) continue;
    if (DerivPtr premise = search(cand)) return make(premise, side, false);
  }
  return nullptr;
}

DerivPtr search_uncached(const CoeffSeq& xi) {
  Universe& u = xi.at(xi.first_index()).universe();
  if (DerivPtr d = try_base(xi)) return d;
  for (int k = xi.last_index() - 1; k >= xi.first_index(); --k) {
    if (DerivPtr d = try_extend(xi, k, u)) return d;
  }
  return nullptr;
}

DerivPtr search(const CoeffSeq& xi) {
  Universe& u = xi.at(xi.first_index()).universe();
  auto& memo = u.caches().sd;
  auto key = seq_key(xi);
  if (auto hit = memo.find(key)) return *hit;
  DerivPtr d = search_uncached(xi);
  memo.insert(key, d);
  return d;
}

void collect_steps(const SdDerivation& d, std::vector<std::string>& out) {
  if (d.kind == SdDerivation::Kind::Base) {
    out.push_back("Base(" + print(d.result.at(d.result.last_index())) +
                  ") => " + print(d.result));
    return;
  }
  collect_steps(*d.premise, out);
  collect_steps(*d.side, out);
  out.push_back("Extend(k=" + std::to_string(d.k) + ", zeta=" + print(d.zeta) +
                ", a=" + print(d.coeff) +
                (d.keep_tail ? ", keep tail" : ", zero tail") + ") => " +
                print(d.result));
}

}  // namespace

std::vector<std::string> SdDerivation::steps() const {
  std::vector<std::string> out;
  collect_steps(*this, out);
  return out;
}

std::shared_ptr<const SdDerivation> in_sd(const CoeffSeq& xi) {
  if (xi.size() == 0) {
    throw Error(ErrorKind::ArityError, "empty coefficient sequence");
  }
  return search(xi);
}

std::optional<CoeffSeq> replay(const SdDerivation& d) {
  const CoeffSeq& r = d.result;
  if (r.size() == 0) return std::nullopt;
  Universe& u = r.at(r.first_index()).universe();
  if (d.kind == SdDerivation::Kind::Base) {
    for (int i = r.first_index(); i < r.last_index(); ++i) {
      if (!r.at(i).is_zero()) return std::nullopt;
    }
    if (!r.at(r.last_index()).below_lambda()) return std::nullopt;
    return r;
  }
  if (!d.premise || !d.side) return std::nullopt;
  auto p = replay(*d.premise);
  auto s = replay(*d.side);
  if (!p || !s) return std::nullopt;
  const int k = d.k;
  if (k < p->first_index() || k + 1 > p->last_index()) return std::nullopt;
  if (!(*s == truncate(*p, k, u).with(k + 1, d.zeta))) return std::nullopt;
  if (!vec_step_down(tail_after(*p, k), d.zeta)) return std::nullopt;
  if (d.coeff.is_zero() || d.zeta.is_zero()) return std::nullopt;
  Exp stepped = exp_add(p->at(k), u.exp_power(d.zeta, d.coeff));
  CoeffSeq out = d.keep_tail ? p->with(k, stepped)
                             : truncate(p->with(k, stepped), k, u);
  if (!(out == r)) return std::nullopt;
  return out;
}

std::string SdConditions::first_failure() const {
  if (!prefixes) return "prefixes in SD";
  if (!no_gaps) return "no zero gaps";
  if (!tail_step_down) return "tail step-down";
  if (!irreducible) return "irreducible";
  return {};
}

SdConditions sd_necessary_conditions(const CoeffSeq& xi) {
  SdConditions c;
  if (xi.size() == 0) return c;
  Universe& u = xi.at(xi.first_index()).universe();
  const int first = xi.first_index();
  const int last = xi.last_index();
  for (int i = first; i <= last && c.prefixes; ++i) {
    c.prefixes = in_sd(truncate(xi, i, u)) != nullptr;
  }
  for (int i = first; i <= last; ++i) {
    for (int j = i + 1; j <= last; ++j) {
      for (int k = j + 1; k <= last; ++k) {
        if (!xi.at(i).is_zero() && !xi.at(k).is_zero() && xi.at(j).is_zero()) {
          c.no_gaps = false;
        }
      }
    }
  }
  for (int i = first; i < last && c.tail_step_down; ++i) {
    if (xi.at(i).is_zero()) continue;
    c.tail_step_down = vec_step_down(tail_after(xi, i), te(xi.at(i)));
  }
  c.irreducible = irreducible(xi);
  return c;
}

}  // namespace otn
