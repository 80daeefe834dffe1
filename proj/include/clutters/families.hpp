#pragma once

#include <utility>
#include <vector>

#include "clutters/clutter.hpp"

namespace clutters {

/// Z(n, k): vertex set Z_n, circuits {i, i+1, ..., i+k-1 mod n} for each i.
/// k = n gives a single circuit.  Requires 1 <= k <= n.
Clutter make_cyclic_uniform(int n, int k);

/// The cycle graph C_n = Z(n, 2).
Clutter make_cycle_graph(int n);

/// X(n) on 2n vertices: the set of odd-position vertices, the set of even
/// ones, and the n adjacent pairs (boundary of the cross-polytope with two
/// opposite facets removed, on the non-face side).  Requires n >= 1.
Clutter make_deleted_crosspolytope(int n);

/// Y(n) on 2n vertices: every n-subset except the first and second halves.
/// Requires n >= 1.
Clutter make_two_facet_complement(int n);

/// K(n, d): all d-subsets of an n-set.  Requires 1 <= d <= n.
Clutter make_complete_uniform(int n, int d);

/// Circuit clutter of the graphic matroid of a simple graph: ground set
/// indexes the edge list; circuits are edge sets of simple cycles.
Clutter make_graphic_matroid_circuits(
    const std::vector<std::pair<int, int>>& edges);

}  // namespace clutters
