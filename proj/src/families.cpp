#include "clutters/families.hpp"

#include <algorithm>
#include <stdexcept>

#include "clutters/core_ops.hpp"

namespace clutters {

Clutter make_cyclic_uniform(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("requires 1 <= k <= n");
  std::vector<BitFace> circuits;
  const int count = (k == n) ? 1 : n;
  for (int i = 0; i < count; ++i) {
    Mask m = 0;
    for (int j = 0; j < k; ++j) m |= Mask{1} << ((i + j) % n);
    circuits.push_back(BitFace(m));
  }
  return Clutter(n, std::move(circuits));
}

Clutter make_cycle_graph(int n) { return make_cyclic_uniform(n, 2); }

Clutter make_deleted_crosspolytope(int n) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  std::vector<BitFace> circuits;
  Mask odds = 0, evens = 0;
  for (int i = 0; i < n; ++i) {
    odds |= Mask{1} << (2 * i);
    evens |= Mask{1} << (2 * i + 1);
    circuits.push_back(BitFace::of({2 * i, 2 * i + 1}));
  }
  circuits.push_back(BitFace(odds));
  circuits.push_back(BitFace(evens));
  // n = 1 degenerates: the pair contains both singletons.
  return Clutter::minimal(2 * n, std::move(circuits));
}

Clutter make_two_facet_complement(int n) {
  if (n < 1) throw std::invalid_argument("requires n >= 1");
  const BitFace first_half = BitFace::full(n);
  const BitFace second_half = BitFace(BitFace::full(n).bits() << n);
  return d_complement(Clutter(2 * n, {first_half, second_half}), n);
}

Clutter make_complete_uniform(int n, int d) {
  if (d < 1 || d > n) throw std::invalid_argument("requires 1 <= d <= n");
  return d_complement(Clutter(n, {}), d);
}

namespace {

// Cycles through `start` using only larger-indexed interior vertices, so
// each cycle is found once (from its smallest vertex).
void cycle_dfs(const std::vector<std::vector<std::pair<int, int>>>& adj,
               int start, int current, Mask visited, Mask edge_set,
               std::vector<BitFace>& out) {
  for (auto [next, edge] : adj[static_cast<std::size_t>(current)]) {
    if (next == start && BitFace(edge_set).size() >= 2) {
      out.push_back(BitFace(edge_set | (Mask{1} << edge)));
      continue;
    }
    if (next <= start || (visited & (Mask{1} << next))) continue;
    cycle_dfs(adj, start, next, visited | (Mask{1} << next),
              edge_set | (Mask{1} << edge), out);
  }
}

}  // namespace

Clutter make_graphic_matroid_circuits(
    const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() > static_cast<std::size_t>(kMaxVertices))
    throw std::invalid_argument("at most 32 edges supported");
  int vertices = 0;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a == b)
      throw std::invalid_argument("edges must join distinct nonnegative vertices");
    vertices = std::max({vertices, a + 1, b + 1});
  }
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(vertices));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    adj[static_cast<std::size_t>(a)].emplace_back(b, static_cast<int>(i));
    adj[static_cast<std::size_t>(b)].emplace_back(a, static_cast<int>(i));
  }
  std::vector<BitFace> circuits;
  for (int s = 0; s < vertices; ++s)
    cycle_dfs(adj, s, s, Mask{1} << s, 0, circuits);
  return Clutter::minimal(static_cast<int>(edges.size()), std::move(circuits));
}

}  // namespace clutters
