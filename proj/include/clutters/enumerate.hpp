#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clutters/caches.hpp"
#include "clutters/canonical.hpp"
#include "clutters/clutter.hpp"
#include "clutters/homology.hpp"
#include "clutters/structure.hpp"

namespace clutters {

/// One canonical key per isomorphism class of clutters on n labeled
/// vertices (the two degenerate classes included), sorted by key.
/// Generates every antichain of nonempty subsets by recursive growth in
/// increasing mask order and dedupes through the canonical form.
std::vector<CanonicalKey> enumerate_clutters(int n, int jobs = 1);

/// Non-chordal, with every one-step minor chordal (chordality is closed
/// under minors, so one step suffices).
bool is_forbidden_minor_to_chordality(const Clutter& c, ChordalityCache& cache);

/// Non-chordal, with every one-vertex deletion chordal.
bool is_forbidden_subclutter(const Clutter& c, ChordalityCache& cache);

struct ObstructionClass {
  bool d_obstruction = false;   // every proper induced subcomplex shellable
  bool c_obstruction = false;   // every vertex link shellable
  bool dc_obstruction = false;  // everything reachable by deletions/links shellable
  bool any() const { return d_obstruction || c_obstruction || dc_obstruction; }
};

/// Classifies a non-shellable complex; a shellable one gets the empty
/// class.
ObstructionClass obstruction_class(const SimplicialComplex& d, Caches& caches,
                                   Budget& budget);

/// Per-clutter verdicts; the full pipeline emits one of these per
/// isomorphism class.
struct ClassificationRecord {
  CanonicalKey key;
  int n = 0;
  std::vector<BitFace> circuits;  // the canonical representative
  bool chordal = false;
  bool forbidden_minor = false;
  bool forbidden_subclutter = false;
  bool c5_only = false;  // every non-chordal proper minor is a 5-cycle
  std::optional<bool> shellable;  // nullopt: search budget ran out
  bool sequentially_cm = false;
  ObstructionClass obstruction;
  SphereSignature top_skeleton;  // of the pure top skeleton of I(c)
  bool h_negative = false;
  std::optional<bool> audit_agree;  // shelling search vs decomposability
};

struct ClassifyOptions {
  Field coefficients = Field::rationals;
  bool audit = false;
  std::uint64_t budget_per_clutter = UINT64_MAX;
};

ClassificationRecord classify(const Clutter& c, const ClassifyOptions& options,
                              Caches& caches);

struct SummaryCounts {
  long long total = 0;
  long long chordal = 0;
  long long forbidden_minors = 0;
  long long forbidden_minors_shellable = 0;
  long long forbidden_minors_nonshellable = 0;
  long long c5_only = 0;
  long long c5_only_shellable = 0;
  long long dc_obstructions = 0;
  long long shellable = 0;
  long long sequentially_cm = 0;
  long long undecided = 0;
  long long h_anomalies = 0;  // non-shellable yet no negative h entry
};

struct PipelineOptions {
  Field coefficients = Field::rationals;
  bool audit = false;
  int jobs = 1;
  std::uint64_t budget_per_clutter = UINT64_MAX;
};

struct PipelineResult {
  std::vector<ClassificationRecord> records;  // ordered by canonical key
  SummaryCounts all;       // whole universe
  SummaryCounts covering;  // clutters whose circuits cover every vertex
  long long audit_mismatches = 0;
};

/// Enumerates every class on n vertices and classifies each one.
PipelineResult run_pipeline(int n, const PipelineOptions& options,
                            Caches& caches);

SummaryCounts summarize(const std::vector<const ClassificationRecord*>& records);

}  // namespace clutters
