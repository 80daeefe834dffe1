#include "clutters/report.hpp"

#include <json.hpp>
#include <ostream>
#include <istream>
#include <stdexcept>

#include "clutters/core_ops.hpp"
#include "clutters/notation.hpp"

namespace clutters {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json obstruction_to_json(const ObstructionClass& o) {
  ordered_json arr = ordered_json::array();
  if (o.d_obstruction) arr.push_back("d");
  if (o.c_obstruction) arr.push_back("c");
  if (o.dc_obstruction) arr.push_back("dc");
  return arr;
}

}  // namespace

std::string record_to_json(const ClassificationRecord& r) {
  ordered_json j;
  if (r.key.bytes.empty())
    j["key"] = nullptr;
  else
    j["key"] = to_hex(r.key);
  j["n"] = r.n;
  ordered_json circuits = ordered_json::array();
  const LabeledGround labels = LabeledGround::numeric(r.n);
  for (BitFace e : r.circuits) circuits.push_back(format_face(e, labels));
  j["circuits"] = circuits;
  j["chordal"] = r.chordal;
  j["forbidden_minor"] = r.forbidden_minor;
  j["forbidden_subclutter"] = r.forbidden_subclutter;
  j["c5_only"] = r.c5_only;
  if (r.shellable.has_value())
    j["shellable"] = *r.shellable;
  else
    j["shellable"] = nullptr;
  j["sequentially_cm"] = r.sequentially_cm;
  j["obstruction_class"] = obstruction_to_json(r.obstruction);
  j["top_skeleton"] = r.top_skeleton.to_string();
  j["h_negative"] = r.h_negative;
  if (r.audit_agree.has_value()) j["audit_agree"] = *r.audit_agree;
  return j.dump();
}

void write_records_jsonl(std::ostream& out,
                         const std::vector<ClassificationRecord>& records) {
  for (const ClassificationRecord& r : records) out << record_to_json(r) << '\n';
}

void write_summary_csv(std::ostream& out, const SummaryCounts& all,
                       const SummaryCounts& covering) {
  out << "metric,all,covering\n";
  const auto row = [&](const char* name, long long a, long long c) {
    out << name << ',' << a << ',' << c << '\n';
  };
  row("classes", all.total, covering.total);
  row("chordal", all.chordal, covering.chordal);
  row("forbidden_minors", all.forbidden_minors, covering.forbidden_minors);
  row("forbidden_minors_shellable", all.forbidden_minors_shellable,
      covering.forbidden_minors_shellable);
  row("forbidden_minors_non_shellable", all.forbidden_minors_nonshellable,
      covering.forbidden_minors_nonshellable);
  row("c5_only_non_chordal", all.c5_only, covering.c5_only);
  row("c5_only_shellable", all.c5_only_shellable, covering.c5_only_shellable);
  row("dc_obstructions", all.dc_obstructions, covering.dc_obstructions);
  row("shellable", all.shellable, covering.shellable);
  row("sequentially_cm", all.sequentially_cm, covering.sequentially_cm);
  row("undecided", all.undecided, covering.undecided);
  row("h_anomalies", all.h_anomalies, covering.h_anomalies);
}

void write_obstruction_table_csv(
    std::ostream& out, const std::vector<ClassificationRecord>& records) {
  out << "index,key,circuits,independence_facets,top_skeleton\n";
  int index = 0;
  for (const ClassificationRecord& r : records) {
    if (!r.obstruction.dc_obstruction) continue;
    const Clutter c(r.n, r.circuits);
    out << ++index << ',' << to_hex(r.key) << ",\"" << format_clutter(c)
        << "\",\"" << format_facets(independence_complex(c)) << "\","
        << r.top_skeleton.to_string() << '\n';
  }
}

namespace {

ordered_json certificate_json(const SheddingTree& t) {
  ordered_json j;
  switch (t.kind) {
    case SheddingTree::Kind::degenerate:
      j["leaf"] = "degenerate";
      return j;
    case SheddingTree::Kind::simplex:
      j["leaf"] = "simplex";
      return j;
    case SheddingTree::Kind::shed:
      break;
  }
  j["shedding_face"] = format_face(t.face);
  j["link"] = t.link_branch ? certificate_json(*t.link_branch) : nullptr;
  j["deletion"] =
      t.deletion_branch ? certificate_json(*t.deletion_branch) : nullptr;
  return j;
}

constexpr char kCacheMagic[] = "CLCACHE1";

void put_u32(std::ostream& out, std::uint32_t x) {
  char b[4] = {static_cast<char>(x >> 24), static_cast<char>(x >> 16),
               static_cast<char>(x >> 8), static_cast<char>(x)};
  out.write(b, 4);
}

std::uint32_t get_u32(std::istream& in) {
  char b[4];
  if (!in.read(b, 4)) throw std::runtime_error("truncated cache file");
  return (static_cast<std::uint32_t>(static_cast<unsigned char>(b[0])) << 24) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[1])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(b[2])) << 8) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[3]));
}

void save_section(std::ostream& out, char tag, const VerdictCache& cache) {
  const auto entries = cache.sorted_entries();
  out.put(tag);
  put_u32(out, static_cast<std::uint32_t>(entries.size()));
  for (const auto& [key, value] : entries) {
    put_u32(out, static_cast<std::uint32_t>(key.size()));
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    out.put(value ? 1 : 0);
  }
}

void load_section(std::istream& in, char expected_tag, VerdictCache& cache) {
  const int tag = in.get();
  if (tag != expected_tag) throw std::runtime_error("bad cache section tag");
  const std::uint32_t count = get_u32(in);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t len = get_u32(in);
    std::string key(len, '\0');
    if (!in.read(key.data(), len)) throw std::runtime_error("truncated cache file");
    const int value = in.get();
    if (value != 0 && value != 1) throw std::runtime_error("bad cache value");
    cache.insert(key, value == 1);
  }
}

}  // namespace

std::string certificate_to_json(const SheddingTree& tree) {
  return certificate_json(tree).dump();
}

void save_cache_file(std::ostream& out, const Caches& caches) {
  out.write(kCacheMagic, 8);
  save_section(out, 'C', caches.chordal);
  save_section(out, 'D', caches.decomposable);
  save_section(out, 'M', caches.cohen_macaulay);
  save_section(out, 'S', caches.sequentially_cm);
  save_section(out, 'R', caches.minors_shellable);
  save_section(out, 'Q', caches.minors_c5_closed);
}

void load_cache_file(std::istream& in, Caches& caches) {
  char magic[8];
  if (!in.read(magic, 8) || std::string(magic, 8) != kCacheMagic)
    throw std::runtime_error("not a cache file (bad magic)");
  load_section(in, 'C', caches.chordal);
  load_section(in, 'D', caches.decomposable);
  load_section(in, 'M', caches.cohen_macaulay);
  load_section(in, 'S', caches.sequentially_cm);
  load_section(in, 'R', caches.minors_shellable);
  load_section(in, 'Q', caches.minors_c5_closed);
}

}  // namespace clutters
