#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace ribbonfn::detail {

// Pure memo table. Concurrent callers may compute the same entry twice; the
// first insert wins and every computed value for a key is identical.
template <class K, class V, class Hash = std::hash<K>>
class MemoCache {
 public:
  std::optional<V> find(const K& k) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  // Entries are never erased, so the pointer stays valid.
  const V* lookup(const K& k) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    return it == map_.end() ? nullptr : &it->second;
  }

  const V& insert(const K& k, V v) {
    std::unique_lock lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }

  template <class F>
  V get_or_compute(const K& k, F&& compute) {
    if (auto v = find(k)) return *std::move(v);
    V v = compute();
    std::unique_lock lock(mu_);
    return map_.try_emplace(k, std::move(v)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mu_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<K, V, Hash> map_;
};

}  // namespace ribbonfn::detail
