#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "ordertype/level.hpp"
#include "ordertype/term.hpp"

namespace ordertype::detail {

// Per-(term, level) cache: concurrent readers, one writer at a time.
template <class V>
class MemoCache {
 public:
  std::optional<V> find(const OrderTerm& t, Level level) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(Key{t, level});
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const OrderTerm& t, Level level, const V& value) {
    std::unique_lock lock(mutex_);
    if (map_.size() > kMaxEntries) map_.clear();
    map_.emplace(Key{t, level}, value);
  }

 private:
  static constexpr std::size_t kMaxEntries = 1 << 18;
  struct Key {
    OrderTerm term;
    Level level;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return k.term.hash() * 31 + static_cast<std::size_t>(k.level);
    }
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, V, KeyHash> map_;
};

}  // namespace ordertype::detail
