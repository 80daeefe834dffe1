#pragma once

#include <iosfwd>
#include <string>

#include "clutters/caches.hpp"
#include "clutters/decompose.hpp"
#include "clutters/enumerate.hpp"

namespace clutters {

/// One record as a single JSON line (no trailing newline).  Field order is
/// fixed so identical runs emit identical bytes.
std::string record_to_json(const ClassificationRecord& r);

/// records.jsonl: one line per record, in the given order.
void write_records_jsonl(std::ostream& out,
                         const std::vector<ClassificationRecord>& records);

/// summary.csv: metric name, value over the whole universe, value over the
/// clutters covering every vertex.
void write_summary_csv(std::ostream& out, const SummaryCounts& all,
                       const SummaryCounts& covering);

/// table.csv: the dc-obstructions, one row each — canonical circuits, the
/// independence-complex facets, and the top-skeleton signature.
void write_obstruction_table_csv(
    std::ostream& out, const std::vector<ClassificationRecord>& records);

/// Shedding certificate as JSON.
std::string certificate_to_json(const SheddingTree& tree);

// --- the binary verdict cache -------------------------------------------------

/// Format: magic "CLCACHE1", then per section a tag byte, an entry count,
/// and length-prefixed key bytes with one verdict byte each.  Entries are
/// sorted by key so the file is deterministic.
void save_cache_file(std::ostream& out, const Caches& caches);

/// Merges entries from the stream into the caches.  Throws
/// std::runtime_error on a malformed or mismatched file.
void load_cache_file(std::istream& in, Caches& caches);

}  // namespace clutters
