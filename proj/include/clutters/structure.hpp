#pragma once

#include <utility>
#include <vector>

#include "clutters/caches.hpp"
#include "clutters/clutter.hpp"

namespace clutters {

/// Per-vertex structure flags.  A free or complete-neighborhood vertex is
/// always simplicial.
struct VertexVerdict {
  int vertex = 0;
  bool simplicial = false;
  bool free = false;
  bool complete_neighborhood = false;
};

/// True iff for every two distinct circuits e1, e2 through v some circuit
/// lies inside (e1 ∪ e2) ∖ {v}.  A vertex in at most one circuit is
/// vacuously simplicial.
bool is_simplicial_vertex(const Clutter& c, int v);

/// True iff exactly one circuit contains v.
bool is_free_vertex(const Clutter& c, int v);

/// For a d-uniform clutter: true iff the induced subclutter on the
/// neighborhood S = ∪{e ∖ {v} : v ∈ e} has every d-subset of S as a
/// circuit (vacuously true when |S| < d).  Throws if c is not d-uniform.
bool is_complete_neighborhood_vertex(const Clutter& c, int v, int d);

VertexVerdict vertex_verdict(const Clutter& c, int v);

bool has_simplicial_vertex(const Clutter& c);

/// All pairs (v, e) with v ∈ e such that every other circuit e2 through v
/// admits a circuit inside (e ∪ e2) ∖ {v}.
std::vector<std::pair<int, BitFace>> neighborhood_containment_pairs(
    const Clutter& c);

/// Memoized cache type for the chordality recursion.
using ChordalityCache = VerdictCache;

/// True iff c and every minor of c has a simplicial vertex.  Degenerate
/// clutters (no circuits, only the empty circuit, or no vertices) count
/// as chordal so the recursion bottoms out.
bool is_chordal(const Clutter& c, ChordalityCache& cache);

/// Reduction-based test: repeatedly pick a free vertex v with unique
/// circuit e, delete v if e ∖ {v} is strictly contained in another
/// circuit and contract v otherwise; true iff this ends at a degenerate
/// clutter.
bool has_free_vertex_property(const Clutter& c);

/// Weak circuit exchange: any two distinct circuits sharing a vertex v
/// admit a circuit inside their union minus v.
bool is_matroid_circuit_clutter(const Clutter& c);

/// For a graph g: true iff for every independent set A the induced
/// subgraph on V ∖ N[A] is vertex-free or has a simplicial vertex.
/// Throws if g is not 2-uniform.
bool graph_neighborhood_simplicial(const Clutter& g);

}  // namespace clutters
