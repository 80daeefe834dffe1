#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clutters/caches.hpp"
#include "clutters/clutter.hpp"

namespace clutters {

enum class Field { rationals, gf2 };

/// Reduced Betti numbers b̃(-1), ..., b̃(dim) of the augmented chain
/// complex.  The void complex has an all-zero (empty) profile; the empty
/// complex {∅} has b̃(-1) = 1.
struct HomologyProfile {
  std::vector<long long> by_dim;  // by_dim[i] = b̃(i - 1)

  long long betti(int dim) const {
    const int idx = dim + 1;
    if (idx < 0 || idx >= static_cast<int>(by_dim.size())) return 0;
    return by_dim[static_cast<std::size_t>(idx)];
  }
  bool all_zero() const;
  long long reduced_euler() const;  // sum of (-1)^dim * b̃(dim)
  std::string to_string() const;
  bool operator==(const HomologyProfile&) const = default;
};

/// Ranks of boundary matrices over the chosen coefficients; exact
/// fraction-free elimination for the rationals, bit-parallel elimination
/// for GF(2).
HomologyProfile reduced_homology(const SimplicialComplex& d, Field coefficients);

/// Reisner criterion: every face's link (the empty face included) has
/// vanishing reduced homology below its dimension.  Degenerate complexes
/// count as Cohen-Macaulay.
bool is_cohen_macaulay(const SimplicialComplex& d, Field coefficients);
bool is_cohen_macaulay(const SimplicialComplex& d, Field coefficients,
                       Caches& caches);

/// Every pure skeleton is Cohen-Macaulay.
bool is_sequentially_cm(const SimplicialComplex& d, Field coefficients);
bool is_sequentially_cm(const SimplicialComplex& d, Field coefficients,
                        Caches& caches);

/// Repeatedly removes a free pair: a nonempty face contained in exactly
/// one larger face (necessarily a facet covering it).  Homotopy type, and
/// hence the homology profile, is preserved.  Smallest mask first.
SimplicialComplex free_face_collapse(const SimplicialComplex& d);

/// Homology sphere marker: dimension k when the profile has exactly one
/// nonzero entry, equal to 1, in position k; nullopt otherwise.
struct SphereSignature {
  std::optional<int> dimension;
  std::string to_string() const;
  bool operator==(const SphereSignature&) const = default;
};

/// Profile of the complex after free-face collapsing, matched against
/// sphere profiles.
SphereSignature sphere_signature(const SimplicialComplex& d, Field coefficients);

}  // namespace clutters
