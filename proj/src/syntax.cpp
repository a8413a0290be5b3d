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

#include "otn/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "otn/order.hpp"

namespace otn {

namespace {

void print_to(Ord t, std::string& out);
void print_to(Exp x, std::string& out);

bool is_one(Ord t) {
  return t.kind() == OrdKind::Veblen && t.veblen_level().is_zero() &&
         t.veblen_arg().is_zero();
}

void print_principal(Ord t, std::string& out) {
  switch (t.kind()) {
    case OrdKind::BigK:
      out += 'K';
      return;
    case OrdKind::Veblen:
      if (is_one(t)) {
        out += '1';
        return;
      }
      out += "phi(";
      print_to(t.veblen_level(), out);
      out += ',';
      print_to(t.veblen_arg(), out);
      out += ')';
      return;
    case OrdKind::OmegaExp:
      out += "w^(";
      print_to(t.operand(), out);
      out += ')';
      return;
    case OrdKind::OmegaIdx:
      out += "Om(";
      print_to(t.operand(), out);
      out += ')';
      return;
    case OrdKind::Psi: {
      out += "psi(";
      print_to(t.psi_base(), out);
      out += "; ";
      const CoeffSeq& nu = t.psi_coeffs();
      if (!nu.is_zero() || t.psi_form() == PsiForm::Indexed) {
        out += print(nu);
        out += "; ";
      }
      print_to(t.psi_stage(), out);
      out += ')';
      return;
    }
    default:
      return;
  }
}

void print_to(Ord t, std::string& out) {
  if (t.is_zero()) {
    out += '0';
    return;
  }
  auto parts = t.parts();
  std::size_t ones = 0;
  while (ones < parts.size() && is_one(parts[parts.size() - 1 - ones])) ++ones;
  const std::size_t head = parts.size() - ones;
  for (std::size_t i = 0; i < head; ++i) {
    if (i > 0) out += '+';
    print_principal(parts[i], out);
  }
  if (ones > 0) {
    if (head > 0) out += '+';
    out += std::to_string(ones);
  }
}

void print_to(Exp x, std::string& out) {
  if (x.is_zero()) {
    out += '0';
    return;
  }
  if (x.kind() == ExpKind::Ord) {
    print_to(x.as_ord(), out);
    return;
  }
  bool first = true;
  for (const LamTerm& t : x.summands()) {
    if (!first) out += '+';
    first = false;
    out += "L^(";
    print_to(t.exponent, out);
    out += ")*(";
    print_to(t.coeff, out);
    out += ')';
  }
}

constexpr unsigned kMaxLiteral = 1000000;

class Parser {
 public:
  Parser(std::string_view text, Universe& u) : s_(text), u_(u) {}

  Ord whole_ord() {
    Ord t = ord();
    finish();
    return t;
  }
  Exp whole_exp() {
    Exp x = exp();
    finish();
    return x;
  }
  CoeffSeq whole_seq() {
    CoeffSeq s = seq();
    finish();
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorKind::SyntaxError,
                msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  unsigned number() {
    unsigned long long v = 0;
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_] - '0');
      if (v > kMaxLiteral) {
        pos_ = start;
        fail("numeric literal too large");
      }
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  // Appends the principal parts of one summand.
  void summand(std::vector<Ord>& parts, bool alone) {
    if (peek_digit()) {
      std::size_t at = pos_;
      unsigned n = number();
      if (n == 0 && !alone) {
        pos_ = at;
        fail("0 cannot be a summand");
      }
      for (unsigned i = 0; i < n; ++i) parts.push_back(u_.one());
      return;
    }
    if (accept("K")) {
      parts.push_back(u_.big_k());
      return;
    }
    if (accept("phi(")) {
      Ord b = ord();
      expect(",");
      Ord g = ord();
      expect(")");
      parts.push_back(u_.make_veblen(b, g));
      return;
    }
    if (accept("w^(")) {
      Ord b = ord();
      expect(")");
      parts.push_back(u_.make_omega_exp(b));
      return;
    }
    if (accept("Om(")) {
      Ord b = ord();
      expect(")");
      parts.push_back(u_.make_omega_idx(b));
      return;
    }
    if (accept("psi(")) {
      Ord pi = ord();
      expect(";");
      if (peek("[")) {
        CoeffSeq nu = seq();
        expect(";");
        Ord a = ord();
        expect(")");
        parts.push_back(u_.make_psi(pi, std::move(nu), a, PsiForm::Indexed));
      } else {
        Ord a = ord();
        expect(")");
        parts.push_back(u_.make_psi(pi, u_.zero_seq(), a));
      }
      return;
    }
    fail("expected an ordinal term");
  }

  Ord ord() {
    std::vector<Ord> parts;
    std::size_t start = pos_;
    summand(parts, true);
    if (parts.empty()) {
      if (peek("+")) {
        pos_ = start;
        fail("0 cannot be a summand");
      }
      return u_.zero();
    }
    while (accept("+")) summand(parts, false);
    if (parts.size() == 1) return parts[0];
    return u_.make_sum(std::move(parts));
  }

  Exp exp() {
    if (!peek("L")) {
      Ord a = ord();
      return u_.exp_ord(a);
    }
    std::vector<LamTerm> terms;
    do {
      expect("L^(");
      std::size_t at = pos_;
      Exp e = exp();
      if (e.is_zero()) {
        pos_ = at;
        fail("Lambda exponent must be nonzero");
      }
      expect(")*(");
      at = pos_;
      Ord c = ord();
      if (c.is_zero()) {
        pos_ = at;
        fail("Lambda coefficient must be nonzero");
      }
      expect(")");
      terms.push_back(LamTerm{e, c});
    } while (accept("+"));
    return u_.exp_cnf(std::move(terms));
  }

  CoeffSeq seq() {
    expect("[");
    std::vector<Exp> entries;
    entries.push_back(exp());
    while (accept(",")) entries.push_back(exp());
    expect("]");
    if (static_cast<int>(entries.size()) != u_.params().seq_len()) {
      throw Error(ErrorKind::ArityError,
                  "coefficient sequence has " + std::to_string(entries.size()) +
                      " entries, expected " +
                      std::to_string(u_.params().seq_len()));
    }
    return CoeffSeq(std::move(entries));
  }

  std::string_view s_;
  Universe& u_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string print(Ord t) {
  std::string out;
  print_to(t, out);
  return out;
}

std::string print(Exp x) {
  std::string out;
  print_to(x, out);
  return out;
}

std::string print(const CoeffSeq& s) {
  std::string out = "[";
  for (int i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    print_to(s[static_cast<std::size_t>(i)], out);
  }
  out += ']';
  return out;
}

std::string print(const KSet& s) {
  std::vector<Ord> elems = s.elements();
  sort_by_order(elems);
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ", ";
    print_to(elems[i], out);
  }
  out += '}';
  return out;
}

Ord parse_ord(std::string_view text, Universe& u) {
  return Parser(text, u).whole_ord();
}

Exp parse_exp(std::string_view text, Universe& u) {
  return Parser(text, u).whole_exp();
}

CoeffSeq parse_seq(std::string_view text, Universe& u) {
  return Parser(text, u).whole_seq();
}

}  // namespace otn
