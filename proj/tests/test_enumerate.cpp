#include <doctest.h>

#include "clutters/core_ops.hpp"
#include "clutters/decompose.hpp"
#include "clutters/enumerate.hpp"
#include "clutters/families.hpp"
#include "test_util.hpp"

using namespace clutters;

TEST_CASE("forbidden minors to chordality") {
  ChordalityCache cache;
  CHECK(is_forbidden_minor_to_chordality(make_cycle_graph(5), cache));
  CHECK(is_forbidden_minor_to_chordality(make_cyclic_uniform(5, 3), cache));
  CHECK(is_forbidden_minor_to_chordality(
      C1(6, {{1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}}), cache));
  CHECK_FALSE(is_forbidden_minor_to_chordality(make_complete_uniform(4, 2), cache));
  // A non-chordal clutter with an isolated vertex cannot be a forbidden
  // minor: deleting the isolated vertex keeps it non-chordal.
  CHECK_FALSE(is_forbidden_minor_to_chordality(
      disjoint_union(make_cycle_graph(4), Clutter(1, {})), cache));
}

TEST_CASE("forbidden subclutters") {
  ChordalityCache cache;
  CHECK(is_forbidden_subclutter(make_cycle_graph(4), cache));
  CHECK(is_forbidden_subclutter(make_cyclic_uniform(6, 3), cache));
  CHECK_FALSE(is_forbidden_subclutter(make_complete_uniform(5, 2), cache));
  // Every forbidden minor is a forbidden subclutter.
  CHECK(is_forbidden_subclutter(make_cyclic_uniform(5, 3), cache));
}

TEST_CASE("obstruction classes") {
  Caches caches;
  Budget budget;
  // {123, 345, 15}: a d-obstruction, but the link of 3 is two disjoint
  // edges, so neither a c- nor a dc-obstruction.
  const ObstructionClass example =
      obstruction_class(S1(5, {{1, 2, 3}, {3, 4, 5}, {1, 5}}), caches, budget);
  CHECK(example.d_obstruction);
  CHECK_FALSE(example.c_obstruction);
  CHECK_FALSE(example.dc_obstruction);

  const ObstructionClass z53 = obstruction_class(
      independence_complex(make_cyclic_uniform(5, 3)), caches, budget);
  CHECK(z53.d_obstruction);
  CHECK(z53.c_obstruction);
  CHECK(z53.dc_obstruction);

  CHECK_FALSE(obstruction_class(independence_complex(make_cycle_graph(5)),
                                caches, budget)
                  .any());
}

TEST_CASE("classify on the running examples") {
  Caches caches;
  const ClassifyOptions options;

  const ClassificationRecord c5 = classify(make_cycle_graph(5), options, caches);
  CHECK_FALSE(c5.chordal);
  CHECK(c5.forbidden_minor);
  CHECK(c5.shellable == true);
  CHECK_FALSE(c5.obstruction.any());
  CHECK(c5.top_skeleton == SphereSignature{1});

  const ClassificationRecord z53 =
      classify(make_cyclic_uniform(5, 3), options, caches);
  CHECK(z53.forbidden_minor);
  CHECK(z53.shellable == false);
  CHECK(z53.obstruction.dc_obstruction);
  CHECK(z53.top_skeleton == SphereSignature{1});
  CHECK(z53.h_negative);
  CHECK_FALSE(z53.sequentially_cm);

  const ClassificationRecord mixed = classify(
      C1(6, {{1, 2, 3}, {1, 4, 5}, {2, 3, 4, 5}, {2, 3, 6}, {4, 5, 6}}),
      options, caches);
  CHECK(mixed.chordal);
  CHECK(mixed.shellable == true);
  CHECK(mixed.sequentially_cm);

  // Example 4.8's clutter: non-chordal through the 4-cycle contraction,
  // and its complex is not sequentially Cohen-Macaulay.
  const ClassificationRecord squared = classify(
      C1(8, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 1}}), options, caches);
  CHECK_FALSE(squared.chordal);
  CHECK_FALSE(squared.sequentially_cm);

  // Record invariants.
  for (const ClassificationRecord* r : {&c5, &z53, &mixed, &squared}) {
    if (r->obstruction.dc_obstruction) {
      CHECK(r->obstruction.d_obstruction);
      CHECK(r->obstruction.c_obstruction);
    }
    if (r->forbidden_minor) CHECK_FALSE(r->chordal);
    if (r->shellable == true) CHECK(r->sequentially_cm);
  }
}

TEST_CASE("5-vertex pipeline: exactly two forbidden minors") {
  Caches caches;
  PipelineOptions options;
  options.audit = true;
  const PipelineResult result = run_pipeline(5, options, caches);

  CHECK(result.all.total == 210);
  CHECK(result.all.forbidden_minors == 2);
  CHECK(result.all.undecided == 0);
  CHECK(result.audit_mismatches == 0);

  const CanonicalKey c5 = canonical_key(make_cycle_graph(5));
  const CanonicalKey z53 = canonical_key(make_cyclic_uniform(5, 3));
  for (const ClassificationRecord& r : result.records) {
    if (!r.forbidden_minor) continue;
    CHECK((r.key == c5 || r.key == z53));
    CHECK(r.top_skeleton == SphereSignature{1});
    CHECK(r.shellable == (r.key == c5));
  }
  // Every forbidden minor is a forbidden subclutter (a deletion is a
  // minor), and dc-obstructions are non-shellable forbidden minors.
  for (const ClassificationRecord& r : result.records) {
    if (r.forbidden_minor) CHECK(r.forbidden_subclutter);
    CHECK(r.obstruction.dc_obstruction ==
          (r.forbidden_minor && r.shellable == false));
  }
  // The records arrive sorted by canonical key.
  CHECK(std::is_sorted(result.records.begin(), result.records.end(),
                       [](const ClassificationRecord& a,
                          const ClassificationRecord& b) { return a.key < b.key; }));
}

TEST_CASE("c5-only detection") {
  Caches caches;
  const ClassifyOptions options;
  // The 5-cycle plus an isolated vertex has only 5-cycles as non-chordal
  // proper minors, but the isolated vertex is simplicial, so the clutter
  // itself does not count (it never reaches the obstruction candidates).
  const Clutter padded = disjoint_union(make_cycle_graph(5), Clutter(1, {}));
  const ClassificationRecord r = classify(padded, options, caches);
  CHECK_FALSE(r.chordal);
  CHECK_FALSE(r.forbidden_minor);
  CHECK_FALSE(r.c5_only);
  // The 6-cycle's proper minors are all chordal, so it is not "c5 only".
  const ClassificationRecord c6 =
      classify(make_cycle_graph(6), options, caches);
  CHECK(c6.forbidden_minor);
  CHECK_FALSE(c6.c5_only);
  // A clutter with a 4-cycle minor is not "c5 only" either.
  const ClassificationRecord with_c4 = classify(
      disjoint_union(make_cycle_graph(4), Clutter(2, {})), options, caches);
  CHECK_FALSE(with_c4.c5_only);
}

TEST_CASE("worker sharding leaves results unchanged") {
  CHECK(enumerate_clutters(4, 3) == enumerate_clutters(4));
  CHECK(enumerate_clutters(5, 2) == enumerate_clutters(5));

  Caches caches_seq, caches_par;
  PipelineOptions sequential;
  PipelineOptions parallel;
  parallel.jobs = 3;
  const PipelineResult a = run_pipeline(4, sequential, caches_seq);
  const PipelineResult b = run_pipeline(4, parallel, caches_par);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].key == b.records[i].key);
    CHECK(a.records[i].shellable == b.records[i].shellable);
    CHECK(a.records[i].chordal == b.records[i].chordal);
    CHECK(a.records[i].obstruction.dc_obstruction ==
          b.records[i].obstruction.dc_obstruction);
  }
}

TEST_CASE("classification works above the exact-canonicalization bound") {
  Caches caches;
  const ClassifyOptions options;
  // Complete uniform clutter on nine vertices: chordal, so shellable and
  // sequentially Cohen-Macaulay; the record has no canonical key.
  const ClassificationRecord r =
      classify(make_complete_uniform(9, 8), options, caches);
  CHECK(r.n == 9);
  CHECK(r.key.bytes.empty());
  CHECK(r.chordal);
  CHECK(r.shellable == true);
  CHECK(r.sequentially_cm);
  CHECK_FALSE(r.forbidden_minor);
}
