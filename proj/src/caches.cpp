#include "clutters/caches.hpp"

#include <algorithm>

namespace clutters {

std::vector<std::pair<std::string, bool>> VerdictCache::sorted_entries() const {
  std::vector<std::pair<std::string, bool>> out;
  for (const Shard& s : shards_) {
    std::lock_guard<std::mutex> lock(s.mutex);
    out.insert(out.end(), s.map.begin(), s.map.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clutters
