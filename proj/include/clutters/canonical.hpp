#pragma once

#include <span>
#include <string>

#include "clutters/clutter.hpp"

namespace clutters {

/// Relabeling-invariant encoding of a clutter: the lexicographically least
/// sorted circuit-mask list over all vertex permutations, serialized as
/// big-endian bytes [n][count:2][mask:4]*.  Byte order equals semantic
/// order, so keys sort and compare as plain strings.
struct CanonicalKey {
  std::string bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

/// Largest ground set the exact canonicalizer accepts.
inline constexpr int kMaxCanonicalVertices = 8;

/// Minimum over all n! relabelings.  Exact canonicalization is provided
/// for n <= 8; larger ground sets throw std::invalid_argument.
/// `circuits` must be sorted ascending and form an antichain.
CanonicalKey canonical_key_masks(int n, std::span<const Mask> circuits);

CanonicalKey canonical_key(const Clutter& c);

/// Canonical key of the complex's nonface clutter; equal keys iff the
/// complexes are isomorphic (for fixed ground-set size).
CanonicalKey canonical_key(const SimplicialComplex& d);

/// Rebuilds the canonical representative encoded in the key.
Clutter decode_key(const CanonicalKey& key);

std::string to_hex(const CanonicalKey& key);

/// Applies a vertex permutation: vertex v becomes perm[v].
Clutter relabel(const Clutter& c, std::span<const int> perm);

}  // namespace clutters
