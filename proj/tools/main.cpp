// Command-line front end: analyze a single clutter, classify all clutters
// on n vertices, or instantiate one of the named families.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "clutters/core_ops.hpp"
#include "clutters/decompose.hpp"
#include "clutters/enumerate.hpp"
#include "clutters/families.hpp"
#include "clutters/notation.hpp"
#include "clutters/report.hpp"
#include "clutters/structure.hpp"

namespace {

using namespace clutters;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitUndecided = 3;

Field parse_field(const std::string& name) {
  if (name == "rational") return Field::rationals;
  if (name == "gf2") return Field::gf2;
  throw CLI::ValidationError("--coefficients must be rational or gf2");
}

// Breadth-first search for a minor with no simplicial vertex; the witness
// explains a negative chordality verdict.
std::optional<Clutter> nonchordal_witness(const Clutter& c) {
  // Dedupe by canonical key where exact canonicalization exists, by the
  // raw circuit encoding above that bound.
  const auto encode = [](const Clutter& m) {
    if (m.n() <= kMaxCanonicalVertices) return canonical_key(m).bytes;
    std::string raw(1, static_cast<char>(m.n()));
    for (BitFace e : m.circuits())
      for (int shift = 0; shift < 32; shift += 8)
        raw.push_back(static_cast<char>((e.bits() >> shift) & 0xff));
    return raw;
  };
  std::vector<Clutter> frontier = {c};
  std::set<std::string> seen = {encode(c)};
  while (!frontier.empty()) {
    std::vector<Clutter> next;
    for (const Clutter& cur : frontier) {
      if (!cur.degenerate() && !has_simplicial_vertex(cur)) return cur;
      if (cur.n() == 0) continue;
      for (const Clutter& m : minors_one_step(cur)) {
        if (seen.insert(encode(m)).second) next.push_back(m);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

struct AnalyzeFlags {
  Field coefficients = Field::rationals;
  bool audit = false;
  bool certificates = false;
  bool dual = false;
  std::vector<int> complements;
  std::uint64_t budget = UINT64_MAX;
  bool json = false;
};

int analyze_clutter(const Clutter& c, const AnalyzeFlags& flags) {
  Caches caches;
  ClassifyOptions options{flags.coefficients, flags.audit, flags.budget};
  const ClassificationRecord record = classify(c, options, caches);

  if (flags.json) {
    std::cout << record_to_json(record) << '\n';
  } else {
    std::cout << "clutter:              " << format_clutter(c) << "  (n="
              << c.n() << ")\n";
    std::cout << "canonical key:        "
              << (record.key.bytes.empty() ? "(exact form needs n <= 8)"
                                           : to_hex(record.key))
              << '\n';
    std::cout << "chordal:              " << (record.chordal ? "yes" : "no");
    if (!record.chordal) {
      if (const auto witness = nonchordal_witness(c))
        std::cout << "   (witness minor without simplicial vertex: "
                  << format_clutter(*witness) << ")";
    }
    std::cout << '\n';
    std::cout << "forbidden minor:      "
              << (record.forbidden_minor ? "yes" : "no") << '\n';
    std::cout << "forbidden subclutter: "
              << (record.forbidden_subclutter ? "yes" : "no") << '\n';
    std::cout << "free vertex property: "
              << (has_free_vertex_property(c) ? "yes" : "no") << '\n';
    std::cout << "matroid circuits:     "
              << (is_matroid_circuit_clutter(c) ? "yes" : "no") << '\n';
    const SimplicialComplex complex = independence_complex(c);
    std::cout << "independence facets:  " << format_facets(complex) << '\n';
    std::cout << "shellable:            "
              << (record.shellable.has_value()
                      ? (*record.shellable ? "yes" : "no")
                      : "undecided (budget)")
              << '\n';
    std::cout << "sequentially CM:      "
              << (record.sequentially_cm ? "yes" : "no") << '\n';
    std::string obstruction;
    if (record.obstruction.d_obstruction) obstruction += "d ";
    if (record.obstruction.c_obstruction) obstruction += "c ";
    if (record.obstruction.dc_obstruction) obstruction += "dc";
    std::cout << "obstruction class:    "
              << (obstruction.empty() ? "none" : obstruction) << '\n';
    std::cout << "h-triangle negative:  " << (record.h_negative ? "yes" : "no")
              << '\n';
    std::cout << "top skeleton:         " << record.top_skeleton.to_string()
              << '\n';
    const HomologyProfile profile =
        reduced_homology(complex, flags.coefficients);
    std::cout << "homology profile:     " << profile.to_string() << '\n';
    if (record.audit_agree.has_value())
      std::cout << "shelling audit:       "
                << (*record.audit_agree ? "agrees" : "MISMATCH") << '\n';

    if (flags.certificates && record.shellable == true) {
      Budget budget(flags.budget);
      if (const auto k = min_decomposability(complex, caches, budget))
        std::cout << "min decomposability:  " << *k << '\n';
      if (const auto order = find_shelling(complex, budget)) {
        std::cout << "shelling order:       ";
        for (std::size_t i = 0; i < order->size(); ++i)
          std::cout << (i ? ", " : "") << format_face((*order)[i]);
        std::cout << '\n';
      }
      if (const auto tree = shedding_certificate(complex, complex.dim(),
                                                 caches, budget))
        std::cout << "shedding certificate: " << certificate_to_json(*tree)
                  << '\n';
    }
    if (flags.dual) {
      std::cout << "alexander dual:       "
                << format_facets(alexander_dual(complex)) << '\n';
    }
    for (int d : flags.complements) {
      std::cout << "c_" << d << " complement:       "
                << format_clutter(d_complement(c, d)) << '\n';
    }
  }
  return record.shellable.has_value() ? kExitOk : kExitUndecided;
}

std::filesystem::path cache_path(const std::filesystem::path& out_dir) {
  if (const char* env = std::getenv("CLUTTERS_CACHE_DIR"))
    return std::filesystem::path(env) / "cache.bin";
  return out_dir / "cache.bin";
}

int classify_all(int n, const std::filesystem::path& out_dir,
                 const PipelineOptions& options, bool resume,
                 const std::string& universe) {
  Caches caches;
  const std::filesystem::path cache_file = cache_path(out_dir);
  if (resume) {
    std::ifstream in(cache_file, std::ios::binary);
    if (in) {
      load_cache_file(in, caches);
      std::cerr << "resumed from " << cache_file << '\n';
    }
  }

  const PipelineResult result = run_pipeline(n, options, caches);

  std::filesystem::create_directories(out_dir);
  {
    std::ofstream records(out_dir / "records.jsonl");
    if (universe == "covering") {
      std::vector<ClassificationRecord> kept;
      for (const ClassificationRecord& r : result.records) {
        const Clutter c(r.n, r.circuits);
        if (c.support() == c.ground()) kept.push_back(r);
      }
      write_records_jsonl(records, kept);
    } else {
      write_records_jsonl(records, result.records);
    }
  }
  {
    std::ofstream summary(out_dir / "summary.csv");
    write_summary_csv(summary, result.all, result.covering);
  }
  {
    std::ofstream table(out_dir / "table.csv");
    write_obstruction_table_csv(table, result.records);
  }
  {
    if (cache_file.has_parent_path())
      std::filesystem::create_directories(cache_file.parent_path());
    std::ofstream cache(cache_file, std::ios::binary);
    save_cache_file(cache, caches);
  }

  std::cerr << "classes: " << result.all.total
            << "  chordal: " << result.all.chordal
            << "  forbidden minors: " << result.all.forbidden_minors << " ("
            << result.all.forbidden_minors_shellable << " shellable, "
            << result.all.forbidden_minors_nonshellable << " not)"
            << "  c5-only: " << result.all.c5_only
            << "  dc-obstructions: " << result.all.dc_obstructions << '\n';
  if (options.audit)
    std::cerr << "audit mismatches: " << result.audit_mismatches << '\n';
  return result.all.undecided == 0 ? kExitOk : kExitUndecided;
}

Clutter family_clutter(const std::string& name, const std::vector<int>& params) {
  const auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("family " + name + " expects " +
                                  std::to_string(count) + " parameter(s)");
  };
  if (name == "cycle-graph") {
    need(1);
    return make_cycle_graph(params[0]);
  }
  if (name == "cyclic-uniform") {
    need(2);
    return make_cyclic_uniform(params[0], params[1]);
  }
  if (name == "deleted-crosspolytope") {
    need(1);
    return make_deleted_crosspolytope(params[0]);
  }
  if (name == "two-facet-complement") {
    need(1);
    return make_two_facet_complement(params[0]);
  }
  if (name == "complete-uniform") {
    need(2);
    return make_complete_uniform(params[0], params[1]);
  }
  if (name == "graphic-matroid") {
    if (params.size() < 2 || params.size() % 2 != 0)
      throw std::invalid_argument(
          "family graphic-matroid expects an even list of vertex pairs");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < params.size(); i += 2)
      edges.emplace_back(params[i], params[i + 1]);
    return make_graphic_matroid_circuits(edges);
  }
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chordality, shellability and obstruction calculator for clutters"};
  app.require_subcommand(1);

  // analyze ------------------------------------------------------------
  std::string analyze_text;
  AnalyzeFlags analyze_flags;
  std::string analyze_coefficients = "rational";
  auto* analyze = app.add_subcommand("analyze", "classify one clutter");
  analyze->add_option("clutter", analyze_text,
                      "circuits, e.g. \"12, 13, 145\" or \"{1 2}, {10 11}\"")
      ->required();
  analyze->add_option("--coefficients", analyze_coefficients,
                      "homology coefficients: rational or gf2");
  analyze->add_flag("--audit", analyze_flags.audit,
                    "run the independent shelling search as a cross-check");
  analyze->add_flag("--certificates", analyze_flags.certificates,
                    "print a shelling order and a shedding certificate");
  analyze->add_flag("--dual", analyze_flags.dual, "print the Alexander dual");
  analyze->add_option("--complement", analyze_flags.complements,
                      "print the c_d complement for each given d");
  analyze->add_option("--budget", analyze_flags.budget,
                      "search node budget (exceeding reports undecided)");
  analyze->add_flag("--json", analyze_flags.json, "emit the record as JSON");

  // classify -----------------------------------------------------------
  int classify_n = 0;
  std::string classify_out = "out";
  std::string classify_coefficients = "rational";
  std::string classify_universe = "all";
  PipelineOptions pipeline_options;
  bool classify_resume = false;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify every clutter on n vertices");
  classify_cmd->add_option("n", classify_n, "ground-set size (at most 6)")
      ->required();
  classify_cmd->add_option("--out", classify_out, "output directory");
  classify_cmd->add_option("--coefficients", classify_coefficients,
                           "homology coefficients: rational or gf2");
  classify_cmd->add_flag("--audit", pipeline_options.audit,
                         "cross-check every shellability verdict by search");
  classify_cmd->add_option("--jobs", pipeline_options.jobs, "worker threads");
  classify_cmd->add_flag("--resume", classify_resume,
                         "preload verdicts from the cache file");
  classify_cmd->add_option("--universe", classify_universe,
                           "records universe: all or covering");
  classify_cmd->add_option("--budget", pipeline_options.budget_per_clutter,
                           "per-clutter search node budget");

  // family -------------------------------------------------------------
  std::string family_name;
  std::vector<int> family_params;
  bool family_analyze = false;
  AnalyzeFlags family_flags;
  std::string family_coefficients = "rational";
  auto* family = app.add_subcommand("family", "instantiate a named family");
  family->add_option("name", family_name,
                     "cycle-graph | cyclic-uniform | deleted-crosspolytope | "
                     "two-facet-complement | complete-uniform | graphic-matroid")
      ->required();
  family->add_option("params", family_params, "integer parameters");
  family->add_flag("--analyze", family_analyze, "run the full analysis");
  family->add_option("--coefficients", family_coefficients,
                     "homology coefficients: rational or gf2");
  family->add_flag("--audit", family_flags.audit,
                   "run the independent shelling search as well");
  family->add_flag("--certificates", family_flags.certificates,
                   "print certificates with --analyze");
  family->add_flag("--json", family_flags.json, "emit the record as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      analyze_flags.coefficients = parse_field(analyze_coefficients);
      const auto [clutter, labels] = parse_clutter(analyze_text);
      (void)labels;
      return analyze_clutter(clutter, analyze_flags);
    }
    if (classify_cmd->parsed()) {
      if (classify_universe != "all" && classify_universe != "covering") {
        std::cerr << "error: --universe must be all or covering\n";
        return kExitUsage;
      }
      pipeline_options.coefficients = parse_field(classify_coefficients);
      return classify_all(classify_n, classify_out, pipeline_options,
                          classify_resume, classify_universe);
    }
    if (family->parsed()) {
      family_flags.coefficients = parse_field(family_coefficients);
      const Clutter c = family_clutter(family_name, family_params);
      std::cout << "family clutter:       "
                << (c.no_circuits() ? std::string("(no circuits)")
                                    : format_clutter(c))
                << "  (n=" << c.n() << ")\n";
      if (family_analyze) return analyze_clutter(c, family_flags);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const AntichainError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
