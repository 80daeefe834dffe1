#include <doctest.h>

#include <sstream>

#include "clutters/decompose.hpp"
#include "clutters/enumerate.hpp"
#include "clutters/families.hpp"
#include "clutters/report.hpp"
#include "test_util.hpp"

using namespace clutters;

TEST_CASE("record JSON is stable and carries the verdicts") {
  Caches caches;
  const ClassificationRecord record =
      classify(make_cyclic_uniform(5, 3), ClassifyOptions{}, caches);
  const std::string json = record_to_json(record);
  CHECK(json.find("\"chordal\":false") != std::string::npos);
  CHECK(json.find("\"shellable\":false") != std::string::npos);
  CHECK(json.find("\"obstruction_class\":[\"d\",\"c\",\"dc\"]") !=
        std::string::npos);
  CHECK(json.find("\"top_skeleton\":\"S1\"") != std::string::npos);
  CHECK(json.find("\"circuits\":[\"123\",\"124\",\"135\",\"245\",\"345\"]") !=
        std::string::npos);
  // Emitting twice gives identical bytes.
  CHECK(record_to_json(record) == json);
}

TEST_CASE("summary and table writers") {
  Caches caches;
  PipelineOptions options;
  const PipelineResult result = run_pipeline(4, options, caches);

  std::ostringstream summary;
  write_summary_csv(summary, result.all, result.covering);
  CHECK(summary.str().find("metric,all,covering\nclasses,30,") == 0);
  CHECK(summary.str().find("forbidden_minors,1,1") != std::string::npos);

  std::ostringstream records;
  write_records_jsonl(records, result.records);
  std::size_t lines = 0;
  for (char ch : records.str())
    if (ch == '\n') ++lines;
  CHECK(lines == 30);

  // The 4-cycle is the one dc-obstruction on four vertices.
  std::ostringstream table;
  write_obstruction_table_csv(table, result.records);
  CHECK(table.str().find("\"12, 13, 24, 34\",\"14, 23\",S0") !=
        std::string::npos);
}

TEST_CASE("cache files round-trip") {
  Caches caches;
  caches.chordal.insert("alpha", true);
  caches.chordal.insert("beta", false);
  caches.decomposable.insert("gamma", true);
  caches.sequentially_cm.insert("delta", false);

  std::ostringstream out;
  save_cache_file(out, caches);

  Caches reloaded;
  std::istringstream in(out.str());
  load_cache_file(in, reloaded);
  CHECK(reloaded.chordal.find("alpha") == true);
  CHECK(reloaded.chordal.find("beta") == false);
  CHECK(reloaded.decomposable.find("gamma") == true);
  CHECK(reloaded.sequentially_cm.find("delta") == false);
  CHECK_FALSE(reloaded.chordal.find("gamma").has_value());

  // Saving the reloaded caches reproduces the bytes.
  std::ostringstream again;
  save_cache_file(again, reloaded);
  CHECK(again.str() == out.str());

  std::istringstream bad("NOTACACHE");
  Caches scratch;
  CHECK_THROWS_AS(load_cache_file(bad, scratch), std::runtime_error);
}

TEST_CASE("certificates serialize to JSON") {
  Caches caches;
  Budget budget;
  const SimplicialComplex d = S1(3, {{1, 2}, {1, 3}});
  const auto tree = shedding_certificate(d, 0, caches, budget);
  REQUIRE(tree != nullptr);
  const std::string json = certificate_to_json(*tree);
  CHECK(json.find("shedding_face") != std::string::npos);
  CHECK(json.find("link") != std::string::npos);
  CHECK(json.find("deletion") != std::string::npos);
}
