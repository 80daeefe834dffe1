#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace clutters {

/// Thrown when a configured search-node budget runs out.  Callers surface
/// an explicit "undecided" verdict rather than a wrong answer.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search node budget exceeded") {}
};

/// Shared node counter for the backtracking searches.  The default limit
/// is effectively unbounded.
class Budget {
 public:
  explicit Budget(std::uint64_t limit = UINT64_MAX) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    if (used_.fetch_add(nodes, std::memory_order_relaxed) + nodes > limit_)
      throw BudgetExceeded{};
  }

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// Concurrent map from key bytes to a boolean verdict.  Entries are
/// deterministic functions of the key, so double inserts are benign.
class VerdictCache {
 public:
  std::optional<bool> find(const std::string& key) const {
    const Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, bool value) {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mutex);
    s.map.emplace(key, value);
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mutex);
      total += s.map.size();
    }
    return total;
  }

  /// All entries sorted by key; used for the persistent cache file.
  std::vector<std::pair<std::string, bool>> sorted_entries() const;

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, bool> map;
  };
  Shard& shard(const std::string& key) {
    return shards_[std::hash<std::string>{}(key) % kShards];
  }
  const Shard& shard(const std::string& key) const {
    return shards_[std::hash<std::string>{}(key) % kShards];
  }
  mutable std::array<Shard, kShards> shards_;
};

/// The memo tables shared across a run.
struct Caches {
  VerdictCache chordal;            // clutter key -> chordal?
  VerdictCache decomposable;       // complex key + k byte -> k-decomposable?
  VerdictCache cohen_macaulay;     // complex key + field byte -> CM?
  VerdictCache sequentially_cm;    // complex key + field byte -> SCM?
  VerdictCache minors_shellable;   // clutter key -> I of every minor shellable?
  VerdictCache minors_c5_closed;   // clutter key -> non-chordal minors all C5?
};

}  // namespace clutters
