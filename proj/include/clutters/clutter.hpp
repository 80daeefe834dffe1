#pragma once

#include <string>
#include <vector>

#include "clutters/bitface.hpp"

namespace clutters {

/// Removes every set that properly contains another set of the list.
/// The result is sorted by mask value and duplicate-free.
std::vector<BitFace> inclusion_minimal(std::vector<BitFace> faces);

/// Keeps only the inclusion-maximal sets; sorted and duplicate-free.
std::vector<BitFace> inclusion_maximal(std::vector<BitFace> faces);

/// A clutter: a ground set {0, ..., n-1} together with an antichain of
/// circuits.  Two degenerate values exist: the clutter with no circuits
/// at all, and the clutter whose only circuit is the empty set.
class Clutter {
 public:
  /// Validates that the circuits lie in the ground set and form an
  /// antichain; throws std::invalid_argument otherwise.  Circuits are
  /// stored sorted by mask value.
  Clutter(int n, std::vector<BitFace> circuits);

  /// Builds the clutter of inclusion-minimal members of `faces`.
  static Clutter minimal(int n, std::vector<BitFace> faces);

  int n() const { return n_; }
  const std::vector<BitFace>& circuits() const { return circuits_; }

  bool no_circuits() const { return circuits_.empty(); }
  bool empty_circuit_only() const {
    return circuits_.size() == 1 && circuits_[0].empty();
  }
  /// No circuits, or {∅}, or an empty ground set.
  bool degenerate() const {
    return n_ == 0 || circuits_.empty() || empty_circuit_only();
  }

  BitFace ground() const { return BitFace::full(n_); }

  /// True iff s contains no circuit.
  bool is_independent(BitFace s) const;

  /// Vertices appearing in at least one circuit.
  BitFace support() const;

  /// If every circuit has the same cardinality d >= 0, returns d; else -1.
  /// The clutter with no circuits reports -1 as well.
  int uniform_cardinality() const;

  int max_circuit_cardinality() const;
  int min_circuit_cardinality() const;

  bool operator==(const Clutter&) const = default;

 private:
  Clutter() = default;
  int n_ = 0;
  std::vector<BitFace> circuits_;
};

/// A simplicial complex given by its ground set size and the antichain of
/// facets; the face set is the downward closure.  facets = {} is the void
/// complex (no faces at all); facets = {∅} is the empty complex.
class SimplicialComplex {
 public:
  /// Validates antichain and ground-set membership as for Clutter.
  SimplicialComplex(int n, std::vector<BitFace> facets);

  /// Builds the complex generated by `faces` (keeps the maximal ones).
  static SimplicialComplex generated_by(int n, std::vector<BitFace> faces);

  int n() const { return n_; }
  const std::vector<BitFace>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const {
    return facets_.size() == 1 && facets_[0].empty();
  }

  BitFace ground() const { return BitFace::full(n_); }

  /// Dimension of the complex: largest facet cardinality minus one.
  /// The empty complex has dimension -1; the void complex reports -2.
  int dim() const;

  bool is_face(BitFace s) const;

  /// Every face, the empty set included (absent only for the void
  /// complex), sorted by mask value.
  std::vector<BitFace> all_faces() const;

  /// Vertices appearing in at least one facet.
  BitFace support() const;

  bool pure() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_ = 0;
  std::vector<BitFace> facets_;
};

/// External vertex names for a ground set, in index order.  Operations on
/// clutters and complexes are label-free; labels exist only at the I/O
/// boundary.
struct LabeledGround {
  std::vector<std::string> labels;

  /// 1-based decimal labels "1", "2", ..., "n".
  static LabeledGround numeric(int n);

  int size() const { return static_cast<int>(labels.size()); }
  bool operator==(const LabeledGround&) const = default;
};

}  // namespace clutters
