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

#include "otn/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "internal.hpp"
#include "otn/arith.hpp"
#include "otn/cnf.hpp"
#include "otn/order.hpp"
#include "otn/sd.hpp"
#include "otn/syntax.hpp"
#include "otn/validate.hpp"

namespace otn {

int default_size_cap(int n) { return n <= 3 ? 11 : 10; }

EnumerateOptions default_options(int n) {
  EnumerateOptions o;
  o.size_cap = default_size_cap(n);
  o.chain_depth = 3;
  return o;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr int kPoolSizeCap = 5;
constexpr std::size_t kChildrenPerRule = 6;
constexpr std::size_t kFrontierCap = 48;

class Enumerator {
 public:
  Enumerator(Universe& u, const EnumerateOptions& o) : u_(u), o_(o) {}

  Corpus run() {
    const int cap = o_.size_cap;
    by_size_.assign(static_cast<std::size_t>(std::max(cap, 0)) + 1, {});
    if (cap >= 1) {
      offer(u_.zero());
      offer(u_.big_k());
    }
    for (int s = 2; s <= cap; ++s) grow(s);
    if (o_.chain_depth > 0) chain_extension();

    Corpus c;
    c.universe = &u_;
    c.size_cap = cap;
    for (Ord t : all_) {
      if (o_.below && !lt(t, *o_.below)) continue;
      c.terms.push_back(t);
    }
    sort_by_order(c.terms);
    c.chain_terms = chain_count_;
    collect_seqs(c);
    return c;
  }

 private:
  bool offer(Ord t) {
    if (!seen_.insert(t).second) return false;
    if (!is_valid(t)) return false;
    if (all_.size() >= o_.budget) {
      throw Error(ErrorKind::BudgetExceeded,
                  "enumeration exceeded the budget of " +
                      std::to_string(o_.budget) + " terms");
    }
    all_.push_back(t);
    auto s = static_cast<std::size_t>(t.size());
    if (s < by_size_.size()) by_size_[s].push_back(t);
    return true;
  }

  const std::vector<Ord>& bucket(int s) const {
    static const std::vector<Ord> empty;
    if (s < 0 || static_cast<std::size_t>(s) >= by_size_.size()) return empty;
    return by_size_[static_cast<std::size_t>(s)];
  }

  bool below_k(Ord t) { return lt(t, u_.big_k()); }

  void grow(int s) {
    Ord big_k = u_.big_k();
    // Sums: a nonzero prefix followed by one more principal part.
    for (int s1 = 1; s1 <= s - 2; ++s1) {
      for (Ord x : bucket(s1)) {
        if (x.is_zero()) continue;
        Ord last = x.parts().back();
        for (Ord p : bucket(s - s1 - 1)) {
          if (!p.is_principal() || !le(p, last)) continue;
          std::vector<Ord> parts(x.parts().begin(), x.parts().end());
          parts.push_back(p);
          offer(u_.make_sum(std::move(parts)));
        }
      }
    }
    for (int s1 = 1; s1 <= s - 2; ++s1) {
      for (Ord b : bucket(s1)) {
        if (!below_k(b)) continue;
        for (Ord g : bucket(s - 1 - s1)) {
          if (below_k(g)) offer(u_.make_veblen(b, g));
        }
      }
    }
    for (Ord b : bucket(s - 1)) {
      Cmp c = compare(b, big_k);
      if (c == Cmp::GT) offer(u_.make_omega_exp(b));
      if (c == Cmp::LT && !b.is_zero()) offer(u_.make_omega_idx(b));
    }
    for (int s1 = 1; s1 <= s - 2; ++s1) {
      for (Ord pi : bucket(s1)) {
        if (!is_regular(pi)) continue;
        for (Ord a : bucket(s - 1 - s1)) offer(u_.make_psi(pi, u_.zero_seq(), a));
      }
    }
    for (int s1 = 1; s1 <= s - 3; ++s1) {
      for (Ord b : bucket(s1)) {
        if (b.is_zero()) continue;
        for (Ord a : bucket(s - 2 - s1)) offer(k_term(b, a));
      }
    }
    // Mahlo rules over smaller Mahlo bases, for caps large enough to reach
    // them.
    for (Ord pi : all_) {
      if (!is_mahlo(pi) || static_cast<int>(pi.size()) >= s - 1) continue;
      for (const CoeffSeq& nu : mahlo_sequences(pi, nullptr)) {
        int rest = s - 1 - static_cast<int>(pi.size()) - seq_size(nu);
        for (Ord a : bucket(rest)) offer(u_.make_psi(pi, nu, a));
      }
    }
  }

  static int seq_size(const CoeffSeq& nu) {
    int n = 0;
    for (Exp x : nu.entries()) {
      if (!x.is_zero()) n += static_cast<int>(x.size());
    }
    return n;
  }

  Ord k_term(Ord b, Ord a) {
    CoeffSeq nu = u_.zero_seq().with(u_.params().last_index(), u_.exp_ord(b));
    return u_.make_psi(u_.big_k(), nu, a, PsiForm::Indexed);
  }

  // Step-downs of x using coefficients and remainders from the stage pool.
  std::vector<Exp> stepdowns(Exp x) {
    std::vector<Exp> out;
    if (x.is_zero()) return out;
    auto xs = x.summands();
    std::vector<LamTerm> prefix(xs.begin(), xs.end() - 1);
    const LamTerm last = xs.back();
    std::vector<Ord> coeffs{u_.zero()};
    for (Ord p : pool_) {
      if (!p.is_zero() && lt(p, last.coeff)) coeffs.push_back(p);
    }
    for (Ord b : coeffs) {
      std::vector<LamTerm> head = prefix;
      if (!b.is_zero()) head.push_back(LamTerm{last.exponent, b});
      // Remainders below Lambda^e.
      std::vector<std::vector<LamTerm>> rests{{}};
      if (!last.exponent.is_zero()) {
        for (Ord d : pool_) {
          if (d.is_zero() || d.size() > 3) continue;
          if (head.empty()) rests.push_back({LamTerm{u_.exp_zero(), d}});
          for (Ord e : pool_) {
            if (e.is_zero() || e.size() > 3) continue;
            Exp ee = u_.exp_ord(e);
            if (lt(ee, last.exponent)) rests.push_back({LamTerm{ee, d}});
          }
        }
      }
      for (const auto& r : rests) {
        std::vector<LamTerm> z = head;
        z.insert(z.end(), r.begin(), r.end());
        out.push_back(u_.exp_cnf(std::move(z)));
      }
    }
    return out;
  }

  // Candidate coefficient sequences for Mahlo collapses below pi. For the
  // step rule the sequence is a function of b (one per pool element).
  std::vector<CoeffSeq> mahlo_sequences(Ord pi, std::vector<Ord>* bs) {
    std::vector<CoeffSeq> out;
    CoeffSeq m = *m_vec(pi);
    std::optional<int> j = m.last_nonzero();
    if (!j) return out;
    if (*j >= 3) {
      const int k = *j - 1;
      for (Ord b : pool_) {
        if (b.is_zero()) continue;
        CoeffSeq nu = m.with(k, exp_add(m.at(k), u_.exp_power(m.at(k + 1), b)));
        for (int i = k + 1; i <= nu.last_index(); ++i) nu = nu.with(i, u_.exp_zero());
        out.push_back(nu);
        if (bs) bs->push_back(b);
      }
      return out;
    }
    // nu <_sd mu for a part mu of m_2(pi).
    for (Exp mu : parts_of(m.at(2))) {
      if (mu.is_zero()) continue;
      std::vector<std::vector<Exp>> levels;
      Exp host = mu;
      for (int i = 0; i < m.size(); ++i) {
        levels.push_back(stepdowns(host));
        if (host.is_zero()) break;
        host = te(host);
      }
      std::vector<Exp> cur;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i > 0) {
          std::vector<Exp> entries = cur;
          entries.resize(static_cast<std::size_t>(m.size()), u_.exp_zero());
          CoeffSeq nu(entries);
          if (!nu.is_zero()) out.push_back(nu);
        }
        if (i >= levels.size() || i >= static_cast<std::size_t>(m.size())) return;
        for (Exp z : levels[i]) {
          cur.push_back(z);
          rec(i + 1);
          cur.pop_back();
        }
      };
      rec(0);
    }
    std::sort(out.begin(), out.end(), [](const CoeffSeq& a, const CoeffSeq& b) {
      for (int i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return lt(a[i], b[i]);
      }
      return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Adds the first few valid collapses below pi for each candidate sequence
  // family; returns the new terms.
  std::vector<Ord> children(Ord pi) {
    std::vector<Ord> made;
    auto try_add = [&](Ord t, std::size_t& count) {
      if (count >= kChildrenPerRule) return;
      if (offer(t)) {
        ++chain_count_;
        ++count;
        made.push_back(t);
      }
    };
    std::size_t n9 = 0;
    for (Ord a : pool_) try_add(u_.make_psi(pi, u_.zero_seq(), a), n9);
    // One stage per sequence, so that the sequences themselves vary.
    std::size_t nm = 0;
    for (const CoeffSeq& nu : mahlo_sequences(pi, nullptr)) {
      if (nm >= kChildrenPerRule) break;
      tried_.push_back(nu);
      const std::size_t before = nm;
      for (Ord a : pool_) {
        try_add(u_.make_psi(pi, nu, a), nm);
        if (nm != before) break;
      }
    }
    return made;
  }

  void chain_extension() {
    for (Ord t : all_) {
      if (static_cast<int>(t.size()) <= kPoolSizeCap) pool_.push_back(t);
    }
    sort_by_order(pool_);
    std::vector<Ord> frontier;
    std::size_t n10 = 0;
    for (Ord b : pool_) {
      if (b.is_zero()) continue;
      for (Ord a : pool_) {
        if (n10 >= kFrontierCap) break;
        Ord t = k_term(b, a);
        if (offer(t)) {
          ++chain_count_;
          ++n10;
        }
        if (is_valid(t)) frontier.push_back(t);
      }
    }
    for (int round = 0; round < o_.chain_depth && !frontier.empty(); ++round) {
      std::vector<Ord> next;
      for (Ord pi : frontier) {
        for (Ord t : children(pi)) {
          if (is_mahlo(t) && next.size() < kFrontierCap) next.push_back(t);
        }
      }
      frontier = std::move(next);
    }
  }

  void collect_exp(Exp x, std::unordered_set<Exp>& seen, std::vector<Exp>& out) {
    if (!seen.insert(x).second) return;
    out.push_back(x);
    for (const LamTerm& t : x.summands()) {
      collect_exp(t.exponent, seen, out);
      if (!t.exponent.is_zero()) collect_exp(u_.exp_ord(t.coeff), seen, out);
    }
  }

  void collect_seqs(Corpus& c) {
    std::unordered_set<std::string> seen_seq;
    auto add_seq = [&](const CoeffSeq& s) {
      std::string key = print(s);
      if (seen_seq.insert(key).second) c.seqs.push_back(s);
    };
    for (Ord t : c.terms) {
      if (t.is_psi()) add_seq(t.psi_coeffs());
    }
    for (const CoeffSeq& s : tried_) add_seq(s);
    std::unordered_set<Exp> seen_exp;
    collect_exp(u_.exp_zero(), seen_exp, c.exps);
    for (const CoeffSeq& s : c.seqs) {
      for (Exp x : s.entries()) collect_exp(x, seen_exp, c.exps);
    }
    // Small exponent terms built from small ordinals.
    std::vector<Ord> small;
    for (Ord t : c.terms) {
      if (t.size() <= 3 && !t.is_zero()) small.push_back(t);
    }
    std::vector<Exp> lows{};
    for (Ord t : small) {
      Exp e = u_.exp_ord(t);
      collect_exp(e, seen_exp, c.exps);
      lows.push_back(e);
    }
    std::vector<Exp> powers;
    for (Exp e : lows) {
      for (Ord d : small) {
        Exp p = u_.exp_power(e, d);
        collect_exp(p, seen_exp, c.exps);
        powers.push_back(p);
      }
    }
    for (Exp p : powers) {
      for (Exp q : powers) {
        if (!lt(he(q), he(p))) continue;
        std::vector<LamTerm> s(p.summands().begin(), p.summands().end());
        s.push_back(q.summands().front());
        collect_exp(u_.exp_cnf(std::move(s)), seen_exp, c.exps);
      }
    }
    std::vector<Exp> valid;
    for (Exp x : c.exps) {
      if (is_valid_exp(x)) valid.push_back(x);
    }
    std::stable_sort(valid.begin(), valid.end(),
                     [](Exp a, Exp b) { return lt(a, b); });
    c.exps = std::move(valid);
  }

  Universe& u_;
  const EnumerateOptions& o_;
  std::vector<std::vector<Ord>> by_size_;
  std::unordered_set<Ord> seen_;
  std::vector<Ord> all_;
  std::vector<Ord> pool_;
  std::vector<CoeffSeq> tried_;
  std::size_t chain_count_ = 0;
};

}  // namespace

Corpus enumerate(Universe& u, const EnumerateOptions& opts) {
  return Enumerator(u, opts).run();
}

// ---------------------------------------------------------------------------
// Reports

bool OracleReport::pass() const {
  return std::all_of(props.begin(), props.end(),
                     [](const PropResult& p) { return p.pass(); });
}

const PropResult* OracleReport::find(const std::string& name) const {
  for (const PropResult& p : props) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string OracleReport::to_text() const {
  std::ostringstream os;
  for (const PropResult& p : props) {
    os << p.name << ' ' << (p.pass() ? "PASS" : "FAIL") << " checked=" << p.checked
       << " failures=" << p.failures << '\n';
    for (const std::string& c : p.counterexamples) os << "  counterexample: " << c << '\n';
    for (const std::string& n : p.notes) os << "  note: " << n << '\n';
  }
  return os.str();
}

std::string OracleReport::to_json_lines() const {
  std::string out;
  for (const PropResult& p : props) {
    nlohmann::json j;
    j["prop"] = p.name;
    j["status"] = p.pass() ? "PASS" : "FAIL";
    j["checked"] = p.checked;
    j["failures"] = p.failures;
    j["counterexamples"] = p.counterexamples;
    j["notes"] = p.notes;
    out += j.dump();
    out += '\n';
  }
  return out;
}

namespace {

constexpr std::size_t kMaxExamples = 10;

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }

  template <typename F>
  void expect(bool ok, F&& describe) {
    ++r_.checked;
    if (ok) return;
    ++r_.failures;
    if (r_.counterexamples.size() < kMaxExamples) r_.counterexamples.push_back(describe());
  }
  void note(std::string s) {
    if (r_.notes.size() < kMaxExamples) r_.notes.push_back(std::move(s));
  }
  PropResult done() { return std::move(r_); }

 private:
  PropResult r_;
};

std::string pair_text(Ord a, Ord b) { return print(a) + " | " + print(b); }

}  // namespace

// ---------------------------------------------------------------------------
// Order axioms

OracleReport check_order_axioms(const Corpus& c, std::uint64_t triple_sample,
                                std::uint64_t seed, int threads) {
  const auto& t = c.terms;
  const std::size_t n = t.size();
  OracleReport report;

  Tally irrefl("irreflexivity");
  for (Ord a : t) {
    irrefl.expect(compare(a, a) == Cmp::EQ, [&] { return print(a); });
  }
  report.props.push_back(irrefl.done());

  struct Bad {
    std::size_t i, j;
    bool trich, anti, sorted;
  };
  threads = std::max(1, threads);
  std::vector<std::vector<Bad>> bad(static_cast<std::size_t>(threads));
  auto work = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < n;
         i += static_cast<std::size_t>(threads)) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Cmp ab = compare(t[i], t[j]);
        Cmp ba = compare(t[j], t[i]);
        bool trich = ab != Cmp::EQ && ba != Cmp::EQ;
        bool anti = ba == flip(ab);
        bool sorted = ab == Cmp::LT;
        if (!trich || !anti || !sorted) {
          bad[static_cast<std::size_t>(w)].push_back(Bad{i, j, trich, anti, sorted});
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<Bad> all_bad;
  for (auto& v : bad) all_bad.insert(all_bad.end(), v.begin(), v.end());
  std::sort(all_bad.begin(), all_bad.end(), [](const Bad& x, const Bad& y) {
    return std::tie(x.i, x.j) < std::tie(y.i, y.j);
  });
  const std::uint64_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  Tally trich("trichotomy"), anti("antisymmetry"), sorted("sorted_chain");
  auto fill = [&](Tally& tally, bool Bad::*field) {
    std::uint64_t failures = 0;
    for (const Bad& b : all_bad) {
      if (b.*field) continue;
      ++failures;
      tally.expect(false, [&] { return pair_text(t[b.i], t[b.j]); });
    }
    PropResult r = tally.done();
    r.checked = pairs;
    r.failures = failures;
    return r;
  };
  report.props.push_back(fill(trich, &Bad::trich));
  report.props.push_back(fill(anti, &Bad::anti));
  report.props.push_back(fill(sorted, &Bad::sorted));

  Tally trans("transitivity");
  if (n > 0) {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < triple_sample; ++s) {
      Ord a = t[rng() % n], b = t[rng() % n], d = t[rng() % n];
      bool premise = lt(a, b) && lt(b, d);
      trans.expect(!premise || lt(a, d), [&] {
        return print(a) + " < " + print(b) + " < " + print(d);
      });
    }
  }
  report.props.push_back(trans.done());
  return report;
}

// ---------------------------------------------------------------------------
// Propositions

namespace {

bool six_case_less(Ord s, Ord t) {
  Ord pi = s.psi_base(), b = s.psi_stage();
  Ord kappa = t.psi_base(), a = t.psi_stage();
  const CoeffSeq& nu = s.psi_coeffs();
  const CoeffSeq& xi = t.psi_coeffs();
  auto with = [](KSet k, std::initializer_list<Ord> extra) {
    for (Ord x : extra) k.insert(x);
    return k;
  };
  KSet knu = components(nu), kxi = components(xi);
  Cmp ba = compare(b, a);
  if (le(pi, t)) return true;
  if (ba == Cmp::LT && lt(s, kappa) && all_below(k_delta(t, with(knu, {pi, b})), a)) {
    return true;
  }
  if (ba == Cmp::GT && !all_below(k_delta(s, with(kxi, {kappa, a})), b)) return true;
  if (ba == Cmp::EQ && lt(kappa, pi) && !all_below(k_delta(s, kappa), b)) return true;
  if (ba == Cmp::EQ && pi == kappa && all_below(k_delta(t, knu), a) && lx_lt(nu, xi, 2)) {
    return true;
  }
  if (ba == Cmp::EQ && pi == kappa && !all_below(k_delta(s, kxi), b)) return true;
  return false;
}

std::optional<Ord> predecessor(Ord sigma) {
  if (!is_successor(sigma)) return std::nullopt;
  auto parts = sigma.parts();
  if (parts.size() == 1) return sigma.universe().zero();
  if (parts.size() == 2) return parts[0];
  return sigma.universe().make_sum(std::vector<Ord>(parts.begin(), parts.end() - 1));
}

}  // namespace

OracleReport check_structure_props(const Corpus& c) {
  OracleReport report;
  const auto& terms = c.terms;
  const auto& exps = c.exps;
  std::vector<Ord> psis, mahlos;
  for (Ord t : terms) {
    if (t.is_psi()) psis.push_back(t);
    if (is_mahlo(t)) mahlos.push_back(t);
  }

  {
    Tally p("head_tail_monotone");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Exp x = exps[i];
      if (x.is_zero() || (x.kind() == ExpKind::Ord && x.as_ord() == x.universe().one())) {
        continue;
      }
      for (std::size_t j = i + 1; j < exps.size(); ++j) {
        Exp y = exps[j];
        p.expect(le(te(x), he(x)) && le(he(x), he(y)),
                 [&] { return print(x) + " < " + print(y); });
      }
    }
    report.props.push_back(p.done());
  }

  std::vector<std::vector<Exp>> vecs;
  for (const CoeffSeq& s : c.seqs) {
    auto e = s.entries();
    for (std::size_t k = 0; k < e.size(); ++k) {
      vecs.push_back(strip_zeros(e.subspan(k)));
    }
  }
  std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      return lt(a[i], b[i]);
    }
    return false;
  });
  vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());

  {
    Tally p("seq_lt_upward");
    for (const auto& nu : vecs) {
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!seq_lt(nu, exps[i])) continue;
        for (std::size_t j = i + 1; j < exps.size(); ++j) {
          p.expect(seq_lt(nu, exps[j]), [&] {
            return print(CoeffSeq(nu)) + " < " + print(exps[i]) + " <= " + print(exps[j]);
          });
        }
      }
    }
    report.props.push_back(p.done());
  }

  {
    Tally p("irreducible_below_head");
    for (const CoeffSeq& s : c.seqs) {
      if (s.is_zero() || !irreducible(s)) continue;
      for (int k = s.first_index(); k <= s.last_index(); ++k) {
        auto tail = s.from(k);
        int k0 = -1;
        for (int i = k; i <= s.last_index(); ++i) {
          if (!s.at(i).is_zero()) {
            k0 = i;
            break;
          }
        }
        if (k0 < 0) break;
        for (Exp x : exps) {
          auto h = he_iter(x, k0 - k);
          if (!h || !lt(s.at(k0), *h)) continue;
          p.expect(seq_lt(tail, x), [&] {
            return print(s) + " from " + std::to_string(k) + " vs " + print(x);
          });
        }
      }
    }
    report.props.push_back(p.done());
  }

  {
    Tally p1("sd_prefixes"), p2("sd_no_gaps"),
        p3("sd_tail_step_down"), p4("sd_irreducible");
    for (const CoeffSeq& s : c.seqs) {
      if (!in_sd(s)) continue;
      SdConditions k = sd_necessary_conditions(s);
      auto d = [&] { return print(s); };
      p1.expect(k.prefixes, d);
      p2.expect(k.no_gaps, d);
      p3.expect(k.tail_step_down, d);
      p4.expect(k.irreducible, d);
    }
    report.props.push_back(p1.done());
    report.props.push_back(p2.done());
    report.props.push_back(p3.done());
    report.props.push_back(p4.done());
  }

  {
    Tally p("m_in_sd");
    for (Ord t : mahlos) {
      p.expect(in_sd(*m_vec(t)) != nullptr, [&] { return print(t); });
    }
    report.props.push_back(p.done());
  }

  {
    Tally p1("stage_increases"), p2("components_below_stage");
    for (Ord t : psis) {
      Ord pi = t.psi_base();
      if (pi.is_psi()) {
        p1.expect(lt(pi.psi_stage(), t.psi_stage()), [&] { return print(t); });
      }
      KSet k = components(t.psi_coeffs());
      p2.expect(std::all_of(k.begin(), k.end(), [&](Ord x) { return le(x, t.psi_stage()); }),
                [&] { return print(t); });
    }
    report.props.push_back(p1.done());
    report.props.push_back(p2.done());
  }

  {
    Tally p("rule_vs_series");
    for (Ord t : mahlos) {
      p.expect(rule_vs_series(t), [&] {
        return print(t) + " rule " + std::string(rule_name(check_ot(t)->rule)) + " L=" +
               std::to_string(collapsing_series(t).size() - 1);
      });
    }
    report.props.push_back(p.done());
  }

  {
    Tally p("sandwich");
    for (Ord t : psis) {
      Ord base = t.psi_base();
      if (base.kind() != OrdKind::OmegaIdx) continue;
      auto alpha = predecessor(base.operand());
      if (!alpha) continue;
      Ord lower = alpha->is_zero() ? alpha->universe().zero() : omega_idx(*alpha);
      p.expect(lt(lower, t) && lt(t, base), [&] { return print(t); });
    }
    report.props.push_back(p.done());
  }

  {
    Tally p("psi_six_cases");
    for (Ord s : psis) {
      for (Ord t : psis) {
        if (s == t) continue;
        bool clauses = lt(s, t);
        p.expect(clauses == six_case_less(s, t), [&] { return pair_text(s, t); });
      }
    }
    report.props.push_back(p.done());
  }

  {
    Tally p("prec_strict_order");
    for (Ord s : psis) {
      p.expect(!prec(s, s), [&] { return print(s); });
      std::vector<Ord> series;
      try {
        series = collapsing_series(s);
      } catch (const Error&) {
        continue;  // chain leaves the psi-terms before reaching K
      }
      p.expect(series.front().is_big_k(), [&] { return print(s); });
      for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        for (std::size_t j = i + 1; j < series.size(); ++j) {
          p.expect(prec(series[j], series[i]), [&] { return print(s); });
        }
      }
    }
    report.props.push_back(p.done());
  }

  {
    Tally mono("hull_monotone"), sum("hull_sum_closure");
    std::vector<Ord> deltas{c.universe->zero(), c.universe->big_k()};
    for (std::size_t i = 0; i < psis.size() && deltas.size() < 12; i += 1 + psis.size() / 10) {
      deltas.push_back(psis[i]);
    }
    std::vector<Ord> gammas;
    for (std::size_t i = 0; i < terms.size(); i += 1 + terms.size() / 24) {
      gammas.push_back(terms[i]);
    }
    for (Ord d : deltas) {
      for (Ord a : terms) {
        KSet k = k_delta(d, a);
        for (std::size_t g = 0; g < gammas.size(); ++g) {
          if (!all_below(k, gammas[g])) continue;
          for (std::size_t h = g + 1; h < gammas.size(); ++h) {
            mono.expect(all_below(k, gammas[h]), [&] { return print(a); });
          }
          if (a.is_sum()) {
            sum.expect(all_below(k_delta(d, a.parts().back()), gammas[g]),
                       [&] { return print(a); });
          }
        }
      }
    }
    report.props.push_back(mono.done());
    report.props.push_back(sum.done());
  }

  {
    Tally part("part_partial_order"), sd("step_down_below"), red("reduct_irreducible");
    for (Exp x : exps) {
      part.expect(is_part(x, x), [&] { return print(x); });
      for (Exp y : exps) {
        if (is_part(x, y) && is_part(y, x)) {
          part.expect(x == y, [&] { return print(x) + " | " + print(y); });
        }
        if (step_down(x, y)) {
          sd.expect(lt(x, y), [&] { return print(x) + " | " + print(y); });
        }
      }
    }
    for (const CoeffSeq& s : c.seqs) {
      red.expect(irreducible(irreducible_reduct(s)), [&] { return print(s); });
    }
    report.props.push_back(part.done());
    report.props.push_back(sd.done());
    report.props.push_back(red.done());
  }

  {
    Tally p("omega_exp_inflationary");
    for (Ord t : terms) {
      Ord w = omega_exp(t);
      p.expect(le(t, w), [&] { return print(t); });
      if (le(t, c.universe->big_k()) && strongly_critical(t)) {
        p.expect(w == t, [&] { return print(t); });
      }
    }
    report.props.push_back(p.done());
  }
  return report;
}

// ---------------------------------------------------------------------------
// SD cross-check

OracleReport sd_cross_check(const Corpus& c, int seq_cap) {
  Universe& u = *c.universe;
  std::vector<Exp> pool;
  for (Exp x : c.exps) {
    if (static_cast<int>(x.size()) <= seq_cap) pool.push_back(x);
  }
  const int len = u.params().seq_len();
  Tally imply("sd_implies_conditions"), rep("sd_replay"), gap("sd_conditions_without_derivation");
  std::vector<Exp> cur;
  std::uint64_t visited = 0;
  std::function<void(int)> rec = [&](int budget) {
    if (static_cast<int>(cur.size()) == len) {
      ++visited;
      CoeffSeq s(cur);
      auto d = in_sd(s);
      SdConditions k = sd_necessary_conditions(s);
      if (d) {
        imply.expect(k.all(), [&] { return print(s) + " fails " + k.first_failure(); });
        auto r = replay(*d);
        rep.expect(r && *r == s, [&] { return print(s); });
      } else if (k.all()) {
        gap.note(print(s));
        gap.expect(true, [] { return std::string(); });
      }
      return;
    }
    for (Exp x : pool) {
      int sz = x.is_zero() ? 0 : static_cast<int>(x.size());
      if (sz > budget) continue;
      cur.push_back(x);
      rec(budget - sz);
      cur.pop_back();
    }
  };
  rec(seq_cap);
  OracleReport report;
  report.props.push_back(imply.done());
  report.props.push_back(rep.done());
  PropResult g = gap.done();
  g.notes.insert(g.notes.begin(), "sequences enumerated: " + std::to_string(visited));
  report.props.push_back(std::move(g));
  return report;
}

// ---------------------------------------------------------------------------
// Descent

DescentResult descent_probe(Ord start, const Corpus& c, std::uint64_t steps,
                            std::uint64_t seed) {
  require_valid(start);
  DescentResult r;
  r.chain.push_back(start);
  std::mt19937_64 rng(seed);
  Ord cur = start;
  for (std::uint64_t i = 0; i < steps; ++i) {
    auto it = std::lower_bound(c.terms.begin(), c.terms.end(), cur,
                               [](Ord a, Ord b) { return lt(a, b); });
    auto below = static_cast<std::size_t>(it - c.terms.begin());
    if (below == 0) {
      r.terminated = true;
      return r;
    }
    cur = c.terms[rng() % below];
    r.chain.push_back(cur);
  }
  auto it = std::lower_bound(c.terms.begin(), c.terms.end(), cur,
                             [](Ord a, Ord b) { return lt(a, b); });
  r.terminated = it == c.terms.begin();
  return r;
}

}  // namespace otn
