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

// Brute-force verification over enumerated terms.

#ifndef OTN_ORACLE_HPP_
#define OTN_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otn/terms.hpp"

namespace otn {

struct EnumerateOptions {
  int size_cap = 0;
  // Rounds of the Mahlo chain extension (0 disables it). The extension adds
  // psi-terms built by the Mahlo rules from a small pool of stages; such
  // terms are far larger than any size cap that keeps the closure small.
  int chain_depth = 0;
  std::size_t budget = 200000;
  // Keep only terms strictly below this one.
  std::optional<Ord> below;
};

struct Corpus {
  Universe* universe = nullptr;
  int size_cap = 0;
  // Validated, duplicate-free, sorted ascending.
  std::vector<Ord> terms;
  // Coefficient sequences of the psi-terms in the corpus, plus the candidate
  // sequences tried by the chain extension.
  std::vector<CoeffSeq> seqs;
  // Exponent terms occurring anywhere in the corpus.
  std::vector<Exp> exps;
  std::size_t chain_terms = 0;
};

int default_size_cap(int n);
EnumerateOptions default_options(int n);

// Throws BudgetExceeded.
Corpus enumerate(Universe& u, const EnumerateOptions& opts);

struct PropResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> counterexamples;
  // Extra lines for review that are not failures.
  std::vector<std::string> notes;

  bool pass() const { return failures == 0; }
};

struct OracleReport {
  std::vector<PropResult> props;

  bool pass() const;
  const PropResult* find(const std::string& name) const;
  std::string to_text() const;
  std::string to_json_lines() const;
};

OracleReport check_order_axioms(const Corpus& c, std::uint64_t triple_sample,
                                std::uint64_t seed, int threads = 1);
OracleReport check_structure_props(const Corpus& c);
OracleReport sd_cross_check(const Corpus& c, int seq_cap);

struct DescentResult {
  std::vector<Ord> chain;  // start first
  bool terminated = false;

  std::size_t length() const { return chain.empty() ? 0 : chain.size() - 1; }
};

DescentResult descent_probe(Ord start, const Corpus& c, std::uint64_t steps,
                            std::uint64_t seed);

}  // namespace otn

#endif  // OTN_ORACLE_HPP_
