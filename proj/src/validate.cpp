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

#include "otn/validate.hpp"

#include <string>
#include <utility>

#include "caches.hpp"
#include "internal.hpp"
#include "otn/cnf.hpp"
#include "otn/order.hpp"
#include "otn/sd.hpp"
#include "otn/syntax.hpp"

namespace otn {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::None: return "None";
    case Rule::Atom: return "Atom";
    case Rule::Sum: return "Sum";
    case Rule::Veblen: return "Veblen";
    case Rule::OmegaExp: return "OmegaExp";
    case Rule::OmegaIdx: return "OmegaIdx";
    case Rule::Psi9: return "Psi9";
    case Rule::Psi10: return "Psi10";
    case Rule::Psi11: return "Psi11";
    case Rule::Psi12: return "Psi12";
  }
  return "None";
}

std::string ValidationReport::failure() const {
  for (const Check& c : checks) {
    if (!c.pass) return c.name;
  }
  return {};
}

// ---------------------------------------------------------------------------
// K_delta

namespace {

void kd(Ord delta, Ord alpha, KSet& out);

KSet kd_psi(Ord delta, Ord alpha) {
  auto& memo = alpha.universe().caches().k_delta;
  std::uint64_t key = detail::pair_key(delta.id(), alpha.id());
  if (auto hit = memo.find(key)) return *hit;
  KSet out;
  // delta may be a candidate still under validation; keep it on the left so
  // the comparison starts from its own base.
  if (le(delta, alpha)) {
    out.insert(alpha.psi_stage());
    kd(delta, alpha.psi_stage(), out);
    kd(delta, alpha.psi_base(), out);
    for (Ord g : components(alpha.psi_coeffs())) kd(delta, g, out);
  }
  memo.insert(key, out);
  return out;
}

void kd(Ord delta, Ord alpha, KSet& out) {
  switch (alpha.kind()) {
    case OrdKind::Zero:
    case OrdKind::BigK:
      return;
    case OrdKind::Sum:
      for (Ord p : alpha.parts()) kd(delta, p, out);
      return;
    case OrdKind::Veblen:
      kd(delta, alpha.veblen_level(), out);
      kd(delta, alpha.veblen_arg(), out);
      return;
    case OrdKind::OmegaExp:
    case OrdKind::OmegaIdx:
      kd(delta, alpha.operand(), out);
      return;
    case OrdKind::Psi:
      out.merge(kd_psi(delta, alpha));
      return;
  }
}

void check_delta(Ord delta) {
  if (!delta.is_zero() && !delta.is_big_k() && !delta.is_psi()) {
    throw Error(ErrorKind::BadDelta,
                "K_delta needs delta = 0, K or a psi-term, got " + print(delta));
  }
}

}  // namespace

KSet k_delta(Ord delta, Ord alpha) {
  check_delta(delta);
  KSet out;
  kd(delta, alpha, out);
  return out;
}

KSet k_delta(Ord delta, std::span<const Ord> alphas) {
  check_delta(delta);
  KSet out;
  for (Ord a : alphas) kd(delta, a, out);
  return out;
}

KSet k_delta(Ord delta, const KSet& alphas) {
  return k_delta(delta, std::span<const Ord>(alphas.elements()));
}

bool all_below(const KSet& s, Ord gamma) {
  for (Ord x : s) {
    if (!lt(x, gamma)) return false;
  }
  return true;
}

bool some_at_least(const KSet& s, Ord b) {
  for (Ord x : s) {
    if (le(b, x)) return true;
  }
  return false;
}

bool hull_member(Ord gamma, Ord delta, Ord alpha) {
  return all_below(k_delta(delta, alpha), gamma);
}

// ---------------------------------------------------------------------------
// m-vector

std::optional<CoeffSeq> m_vec(Ord alpha) {
  Universe& u = alpha.universe();
  switch (alpha.kind()) {
    case OrdKind::BigK:
      return std::nullopt;
    case OrdKind::OmegaIdx:
      if (is_successor(alpha.operand())) {
        return u.zero_seq().with(2, u.exp_ord(u.one()));
      }
      return u.zero_seq();
    case OrdKind::Psi:
      return alpha.psi_coeffs();
    default:
      return u.zero_seq();
  }
}

bool is_mahlo(Ord alpha) {
  return alpha.is_psi() && !alpha.psi_coeffs().is_zero();
}

bool is_regular(Ord alpha) {
  if (alpha.is_big_k()) return true;
  if (alpha.kind() == OrdKind::OmegaIdx) return is_successor(alpha.operand());
  return is_mahlo(alpha);
}

// ---------------------------------------------------------------------------
// Exponent terms

namespace {

bool exp_valid_uncached(Exp x) {
  switch (x.kind()) {
    case ExpKind::Zero:
      return true;
    case ExpKind::Mixed:
      return false;
    case ExpKind::Ord:
      return is_valid(x.as_ord());
    case ExpKind::LamSum: {
      auto s = x.summands();
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].exponent.is_zero()) return false;
        if (!is_valid_exp(s[i].exponent)) return false;
        if (!is_valid(s[i].coeff)) return false;
        if (i > 0 && !lt(s[i].exponent, s[i - 1].exponent)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_valid_exp(Exp x) {
  auto& memo = x.universe().caches().exp_valid;
  if (auto hit = memo.find(x.id())) return *hit;
  bool r = exp_valid_uncached(x);
  memo.insert(x.id(), r);
  return r;
}

// ---------------------------------------------------------------------------
// OT membership

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(Rule rule) { r_.rule = rule; }

  // Records a check; returns its outcome so callers can stop early.
  bool check(std::string name, bool pass) {
    r_.checks.push_back(Check{std::move(name), pass, {}});
    return pass;
  }
  // The witness is only rendered for failing checks.
  template <typename F>
  bool check(std::string name, bool pass, F&& witness) {
    r_.checks.push_back(
        Check{std::move(name), pass, pass ? std::string() : witness()});
    return pass;
  }
  bool sub(Ord t, const char* what) {
    return check(std::string(what) + " in OT", is_valid(t),
                 [&] { return print(t); });
  }
  void set_rule(Rule rule) { r_.rule = rule; }
  ValidationReport& report() { return r_; }

  ValidationReport finish(Ord alpha) {
    r_.ok = true;
    for (const Check& c : r_.checks) r_.ok = r_.ok && c.pass;
    r_.m_vec = m_vec(alpha);
    return std::move(r_);
  }

 private:
  ValidationReport r_;
};

std::string print_set(const KSet& s) { return print(s); }

void validate_psi9(ReportBuilder& rb, Ord alpha) {
  Ord pi = alpha.psi_base(), a = alpha.psi_stage();
  if (!rb.check("pi regular", is_regular(pi), [&] { return print(pi); })) return;
  Ord args[] = {pi, a};
  KSet ks = k_delta(alpha, args);
  rb.check("K_alpha(pi,a)<a", all_below(ks, a), [&] { return print_set(ks); });
}

void validate_psi10(ReportBuilder& rb, Ord alpha) {
  Ord a = alpha.psi_stage();
  const CoeffSeq& nu = alpha.psi_coeffs();
  bool shape = nu.at(nu.last_index()).below_lambda();
  for (int i = nu.first_index(); i < nu.last_index(); ++i) {
    shape = shape && nu.at(i).is_zero();
  }
  if (!rb.check("nu=0*(b)", shape, [&] { return print(nu); })) return;
  Ord b = nu.at(nu.last_index()).as_ord();
  if (!rb.check("0<b", !b.is_zero(), [&] { return print(b); })) return;
  if (!rb.check("b<=a", le(b, a), [&] { return print(b); })) return;
  Ord args[] = {b, a};
  KSet ks = k_delta(alpha, args);
  rb.check("K_alpha(b,a)<a", all_below(ks, a), [&] { return print_set(ks); });
}

// Solves nu_k = x + Lambda^e * b for b > 0.
std::optional<Ord> recover_step(Exp nu_k, Exp x, Exp e) {
  std::vector<LamTerm> prefix;
  for (const LamTerm& t : x.summands()) {
    if (lt(t.exponent, e)) break;
    prefix.push_back(t);
  }
  auto target = nu_k.summands();
  if (target.empty() || !(target.back().exponent == e)) return std::nullopt;
  Ord d = target.back().coeff;
  if (!prefix.empty() && prefix.back().exponent == e) {
    if (target.size() != prefix.size()) return std::nullopt;
    if (!std::equal(prefix.begin(), prefix.end() - 1, target.begin())) {
      return std::nullopt;
    }
    return detail::left_subtract(prefix.back().coeff, d);
  }
  if (target.size() != prefix.size() + 1) return std::nullopt;
  if (!std::equal(prefix.begin(), prefix.end(), target.begin())) {
    return std::nullopt;
  }
  return d;
}

void validate_psi11(ReportBuilder& rb, Ord alpha, const CoeffSeq& m, int k) {
  Ord pi = alpha.psi_base(), a = alpha.psi_stage();
  const CoeffSeq& nu = alpha.psi_coeffs();
  bool lower = true;
  for (int i = nu.first_index(); i < k; ++i) lower = lower && nu.at(i) == m.at(i);
  if (!rb.check("nu_i=m_i(pi) for i<k", lower, [&] { return print(nu); })) return;
  bool upper = true;
  for (int i = k + 1; i <= nu.last_index(); ++i) upper = upper && nu.at(i).is_zero();
  if (!rb.check("nu_i=0 for i>k", upper, [&] { return print(nu); })) return;
  std::optional<Ord> b = recover_step(nu.at(k), m.at(k), m.at(k + 1));
  if (b) {
    Universe& u = alpha.universe();
    b = exp_add(m.at(k), u.exp_power(m.at(k + 1), *b)) == nu.at(k)
            ? b
            : std::nullopt;
  }
  if (!rb.check("nu_k=m_k(pi)+L^m_k+1(pi)*b", b.has_value(), [&] { return print(nu.at(k)); })) {
    return;
  }
  rb.report().step_k = k;
  rb.report().step_b = *b;
  if (!rb.check("0<b", !b->is_zero(), [&] { return print(*b); })) return;
  if (!rb.check("b<=a", le(*b, a), [&] { return print(*b); })) return;
  KSet ks = k_delta(alpha, components(m));
  Ord args[] = {pi, a, *b};
  ks.merge(k_delta(alpha, args));
  rb.check("K_alpha(pi,a,b,K(m(pi)))<a", all_below(ks, a), [&] { return print_set(ks); });
}

void validate_psi12(ReportBuilder& rb, Ord alpha, const CoeffSeq& m) {
  Ord pi = alpha.psi_base(), a = alpha.psi_stage();
  const CoeffSeq& nu = alpha.psi_coeffs();
  if (!rb.check("nu!=0", !nu.is_zero())) return;
  if (!rb.check("nu in SD", in_sd(nu) != nullptr, [&] { return print(nu); })) return;
  if (!rb.check("nu<_sp m_2(pi)", vec_sp(nu.entries(), m.at(2)), [&] { return print(nu); })) {
    return;
  }
  Ord args[] = {pi, a};
  KSet ks = k_delta(alpha, args);
  if (!rb.check("K_alpha(pi,a)<a", all_below(ks, a), [&] { return print_set(ks); })) return;
  for (int k = nu.first_index(); k <= nu.last_index(); ++k) {
    Exp x = nu.at(k);
    if (x.is_zero()) continue;
    KSet comps = components(x);
    Ord top = comps.elements().front();
    for (Ord c : comps) {
      if (lt(top, c)) top = c;
    }
    KSet kk = k_delta(alpha, comps);
    if (!rb.check("K_alpha(nu_" + std::to_string(k) + ")<max K(nu_" +
                      std::to_string(k) + ")",
                  all_below(kk, top), [&] { return print_set(kk); })) {
      return;
    }
  }
}

void validate_psi(ReportBuilder& rb, Ord alpha) {
  Universe& u = alpha.universe();
  Ord pi = alpha.psi_base(), a = alpha.psi_stage();
  const CoeffSeq& nu = alpha.psi_coeffs();
  if (!rb.sub(pi, "pi") || !rb.sub(a, "a")) return;
  for (int i = nu.first_index(); i <= nu.last_index(); ++i) {
    Exp x = nu.at(i);
    if (!rb.check("nu_" + std::to_string(i) + " in E", is_valid_exp(x), [&] { return print(x); })) {
      return;
    }
  }
  if (nu.is_zero() && alpha.psi_form() == PsiForm::Plain) {
    rb.set_rule(Rule::Psi9);
    validate_psi9(rb, alpha);
    return;
  }
  if (pi.is_big_k()) {
    rb.set_rule(Rule::Psi10);
    validate_psi10(rb, alpha);
    return;
  }
  if (!rb.check("pi<K", lt(pi, u.big_k()), [&] { return print(pi); })) return;
  CoeffSeq m = *m_vec(pi);
  std::optional<int> j = m.last_nonzero();
  if (!rb.check("m(pi)!=0", j.has_value(), [&] { return print(pi); })) return;
  if (*j >= 3) {
    rb.set_rule(Rule::Psi11);
    validate_psi11(rb, alpha, m, *j - 1);
  } else {
    rb.set_rule(Rule::Psi12);
    validate_psi12(rb, alpha, m);
  }
}

ValidationReport validate(Ord alpha) {
  Universe& u = alpha.universe();
  switch (alpha.kind()) {
    case OrdKind::Zero:
    case OrdKind::BigK: {
      ReportBuilder rb(Rule::Atom);
      return rb.finish(alpha);
    }
    case OrdKind::Sum: {
      ReportBuilder rb(Rule::Sum);
      auto parts = alpha.parts();
      bool ok = true;
      for (Ord p : parts) ok = ok && rb.sub(p, "summand");
      if (ok) {
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
          if (!rb.check("summands weakly decreasing", !lt(parts[i], parts[i + 1]), [&] { return print(parts[i + 1]); })) {
            break;
          }
        }
      }
      return rb.finish(alpha);
    }
    case OrdKind::Veblen: {
      ReportBuilder rb(Rule::Veblen);
      Ord b = alpha.veblen_level(), g = alpha.veblen_arg();
      if (rb.sub(b, "beta") && rb.sub(g, "gamma") &&
          rb.check("beta<K", lt(b, u.big_k())) &&
          rb.check("gamma<K", lt(g, u.big_k()))) {
        bool g_fixed =
            (g.kind() == OrdKind::Veblen && lt(b, g.veblen_level())) ||
            (strongly_critical(g) && lt(b, g));
        if (rb.check("gamma<phi(beta,gamma)", !g_fixed, [&] { return print(g); })) {
          bool b_fixed = strongly_critical(b) && g.is_zero();
          rb.check("beta<phi(beta,gamma)", !b_fixed, [&] { return print(b); });
        }
      }
      return rb.finish(alpha);
    }
    case OrdKind::OmegaExp: {
      ReportBuilder rb(Rule::OmegaExp);
      Ord b = alpha.operand();
      if (rb.sub(b, "beta")) rb.check("K<beta", lt(u.big_k(), b), [&] { return print(b); });
      return rb.finish(alpha);
    }
    case OrdKind::OmegaIdx: {
      ReportBuilder rb(Rule::OmegaIdx);
      Ord b = alpha.operand();
      if (rb.sub(b, "beta") && rb.check("0<beta", !b.is_zero()) &&
          rb.check("beta<K", lt(b, u.big_k()), [&] { return print(b); })) {
        rb.check("beta<Omega_beta", !omega_fixed_point(b), [&] { return print(b); });
      }
      return rb.finish(alpha);
    }
    case OrdKind::Psi: {
      ReportBuilder rb(Rule::None);
      validate_psi(rb, alpha);
      return rb.finish(alpha);
    }
  }
  return ValidationReport{};
}

}  // namespace

std::shared_ptr<const ValidationReport> check_ot(Ord alpha) {
  auto& memo = alpha.universe().caches().reports;
  if (auto hit = memo.find(alpha.id())) return *hit;
  auto r = std::make_shared<const ValidationReport>(validate(alpha));
  memo.insert(alpha.id(), r);
  return r;
}

bool is_valid(Ord alpha) { return check_ot(alpha)->ok; }

void require_valid(Ord alpha) {
  if (!is_valid(alpha)) {
    throw Error(ErrorKind::UnvalidatedInput,
                "not a member of OT: " + print(alpha) + " (" +
                    check_ot(alpha)->failure() + ")");
  }
}

void require_valid(Exp x) {
  if (!is_valid_exp(x)) {
    throw Error(ErrorKind::UnvalidatedInput, "not a member of E: " + print(x));
  }
}

void throw_invalid(Ord alpha, const ValidationReport& report) {
  throw Error(ErrorKind::InvalidTerm,
              print(alpha) + " fails " + report.failure() + " (rule " +
                  std::string(rule_name(report.rule)) + ")");
}

bool rule_vs_series(Ord alpha) {
  if (!is_mahlo(alpha) || !is_valid(alpha)) {
    throw Error(ErrorKind::NotMahloTerm,
                "not a validated Mahlo psi-term: " + print(alpha));
  }
  const std::size_t L = collapsing_series(alpha).size() - 1;
  const std::size_t period = static_cast<std::size_t>(alpha.universe().n() - 2);
  Rule expected;
  if (L == 1) {
    expected = Rule::Psi10;
  } else if (L % period == 1 % period) {
    expected = Rule::Psi12;
  } else {
    expected = Rule::Psi11;
  }
  return check_ot(alpha)->rule == expected;
}

}  // namespace otn
