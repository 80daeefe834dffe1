#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "clutters/caches.hpp"
#include "clutters/clutter.hpp"

namespace clutters {

// --- shedding faces ----------------------------------------------------------

/// Facet form: s (a nonempty face) is shedding iff no facet of
/// (star s) ∖ s is a facet of d ∖ s.
bool is_shedding_face(const SimplicialComplex& d, BitFace s);

/// Exchange form: every face τ containing s admits, for each v in s, a
/// vertex w outside τ with (τ ∖ {v}) ∪ {w} a face.  Equivalent to the
/// facet form; kept as an independent route for cross-checks.
bool is_shedding_face_exchange(const SimplicialComplex& d, BitFace s);

// --- k-decomposability -------------------------------------------------------

/// Replayable witness of a k-decomposition: internal nodes name the chosen
/// shedding face, with subtrees for the link and the face deletion.
struct SheddingTree {
  enum class Kind { degenerate, simplex, shed };
  Kind kind = Kind::degenerate;
  BitFace face;
  std::unique_ptr<SheddingTree> link_branch;
  std::unique_ptr<SheddingTree> deletion_branch;

  int max_face_dimension() const;
};

/// Recursive search over shedding faces of dimension <= k, smallest
/// dimension first.  Degenerate complexes and simplices are k-decomposable
/// for every k >= -1.  Memoized on canonical keys across the run.
bool is_k_decomposable(const SimplicialComplex& d, int k, Caches& caches,
                       Budget& budget);

/// Witness tree when d is k-decomposable, nullptr otherwise.
std::unique_ptr<SheddingTree> shedding_certificate(const SimplicialComplex& d,
                                                   int k, Caches& caches,
                                                   Budget& budget);

/// Re-derives the decomposition from the tree; true iff every step checks.
bool replay_certificate(const SimplicialComplex& d, const SheddingTree& tree,
                        int k);

/// Smallest k for which d is k-decomposable, or nullopt if d is not
/// shellable.
std::optional<int> min_decomposability(const SimplicialComplex& d,
                                       Caches& caches, Budget& budget);

// --- shellings ---------------------------------------------------------------

/// Backtracking search for a shelling order, restricted to weakly
/// decreasing facet dimension (every shellable complex has one of this
/// shape).  Returns the witness order, or nullopt.
std::optional<std::vector<BitFace>> find_shelling(const SimplicialComplex& d,
                                                  Budget& budget);

/// Checks the defining condition: each facet meets the complex generated
/// by its predecessors in a pure codimension-one subcomplex.
bool is_valid_shelling(const SimplicialComplex& d,
                       std::span<const BitFace> order);

// --- the f/h-triangle --------------------------------------------------------

/// f[i][j] counts faces of cardinality j whose degree (largest cardinality
/// of a containing facet) is i; h is its row-wise transform
/// h[i][j] = sum_k (-1)^(j-k) C(i-k, j-k) f[i][k].  Shellable complexes
/// have no negative h entry.
struct FHTriangle {
  std::vector<std::vector<long long>> f;
  std::vector<std::vector<long long>> h;
};

FHTriangle fh_triangle(const SimplicialComplex& d);

bool has_negative_h(const FHTriangle& t);

// --- the umbrella decision ---------------------------------------------------

/// h-triangle prefilter, then decomposability at k = dim d (the two agree
/// with the shelling search; see find_shelling for the audit route).
bool is_shellable(const SimplicialComplex& d, Caches& caches, Budget& budget);

}  // namespace clutters
