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

// Per-universe memo tables. All tables are pure functions of their keys, so
// results never depend on which thread filled an entry first.

#ifndef OTN_SRC_CACHES_HPP_
#define OTN_SRC_CACHES_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "otn/sd.hpp"
#include "otn/terms.hpp"
#include "otn/validate.hpp"

namespace otn::detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto x : v) {
      h ^= x;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ShardedMap {
 public:
  std::optional<Value> find(const Key& key) const {
    const Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, Value value) {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    s.map.emplace(key, std::move(value));
  }

  void clear() {
    for (auto& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mu);
      s.map.clear();
    }
  }

 private:
  static constexpr std::size_t kShards = 32;
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<Key, Value, Hash> map;
  };

  Shard& shard(const Key& key) { return shards_[Hash()(key) % kShards]; }
  const Shard& shard(const Key& key) const {
    return shards_[Hash()(key) % kShards];
  }

  std::array<Shard, kShards> shards_;
};

inline std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Caches {
  // (left id, right id) -> left < right, for psi-term pairs.
  ShardedMap<std::uint64_t, bool> psi_less;
  // (delta id, alpha id) -> K_delta(alpha), for psi-terms alpha.
  ShardedMap<std::uint64_t, KSet> k_delta;
  ShardedMap<std::uint32_t, std::shared_ptr<const ValidationReport>> reports;
  ShardedMap<std::uint32_t, bool> exp_valid;
  ShardedMap<std::vector<std::uint32_t>, std::shared_ptr<const SdDerivation>,
             VecHash>
      sd;

  void clear() {
    psi_less.clear();
    k_delta.clear();
    reports.clear();
    exp_valid.clear();
    sd.clear();
  }
};

}  // namespace otn::detail

#endif  // OTN_SRC_CACHES_HPP_
