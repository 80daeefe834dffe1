#pragma once

#include <vector>

#include "clutters/clutter.hpp"

namespace clutters {

// --- clutter minors ---------------------------------------------------------

/// Removes vertex v and every circuit containing it; indices above v shift
/// down.  Throws std::out_of_range for v outside the ground set.
Clutter delete_vertex(const Clutter& c, int v);

/// Removes v from each circuit containing it, then keeps the inclusion-
/// minimal results.  Contracting the last vertex of a singleton circuit
/// leaves the clutter {∅}.
Clutter contract_vertex(const Clutter& c, int v);

/// The 2n clutters obtained by deleting or contracting each vertex once.
std::vector<Clutter> minors_one_step(const Clutter& c);

/// Deletes every vertex of s (in any order; the operations commute).
Clutter delete_vertices(const Clutter& c, BitFace s);

/// Contracts every vertex of s.
Clutter contract_vertices(const Clutter& c, BitFace s);

/// The induced subclutter on vertex set `keep`: deletes everything else.
Clutter induced_subclutter(const Clutter& c, BitFace keep);

/// Minimal sets of circuits ∪ {s}.  s must be an independent set.
Clutter augment_with_nonface(const Clutter& c, BitFace s);

/// Disjoint union: ground sets concatenated, d's indices shifted by c.n().
Clutter disjoint_union(const Clutter& c, const Clutter& d);

// --- the complex/clutter correspondence -------------------------------------

/// Minimal transversals: the inclusion-minimal sets meeting every circuit.
/// blocker({}) = {∅} and blocker of anything containing ∅ has no circuits.
Clutter blocker(const Clutter& c);

/// The complex of independent sets, as its antichain of facets.
SimplicialComplex independence_complex(const Clutter& c);

/// Minimal non-faces of d; the inverse of independence_complex.
Clutter nonface_clutter(const SimplicialComplex& d);

// --- complex operations ------------------------------------------------------

/// Faces {τ : τ ∩ s = ∅, τ ∪ s a face}, on ground set V∖s (reindexed).
/// Throws std::invalid_argument if s is not a face.
SimplicialComplex link(const SimplicialComplex& d, BitFace s);

/// Removes every face containing s; ground set unchanged.  Deleting ∅
/// yields the void complex.
SimplicialComplex delete_face(const SimplicialComplex& d, BitFace s);

/// Faces contained in V∖{v}, on the reindexed ground set of size n-1.
SimplicialComplex delete_vertex(const SimplicialComplex& d, int v);

/// The induced subcomplex on `keep`, reindexed to |keep| vertices.
SimplicialComplex induced_subcomplex(const SimplicialComplex& d, BitFace keep);

/// Join: facets are unions of one facet from each, with d2's indices
/// shifted by d1.n().
SimplicialComplex join(const SimplicialComplex& d1, const SimplicialComplex& d2);

/// pure = true: the subcomplex generated by faces of dimension exactly s.
/// pure = false: all faces of dimension at most s.
SimplicialComplex skeleton(const SimplicialComplex& d, int s, bool pure);

/// The pure top-dimensional skeleton.
SimplicialComplex top_skeleton(const SimplicialComplex& d);

/// Facets are complements of minimal non-faces, over the same ground set.
SimplicialComplex alexander_dual(const SimplicialComplex& d);

/// The d-uniform clutter of the d-sets that are not circuits of c.
Clutter d_complement(const Clutter& c, int d);

/// Drops ground vertices in no facet, reindexing.  The face set is
/// unchanged, so shellability, decomposability and homology agree.
SimplicialComplex restrict_to_support(const SimplicialComplex& d);

/// Drops ground vertices in no circuit, reindexing.
Clutter restrict_to_support(const Clutter& c);

}  // namespace clutters
