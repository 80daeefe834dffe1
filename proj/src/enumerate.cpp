#include "clutters/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

#include "clutters/core_ops.hpp"
#include "clutters/decompose.hpp"
#include "clutters/families.hpp"

namespace clutters {

namespace {

// Every antichain of nonempty subsets extending `chosen` with masks above
// `last`.  In increasing mask order a new member can never be a proper
// subset of a chosen one, so only the superset direction needs checking.
void grow_antichains(int n, std::vector<Mask>& chosen, Mask last, Mask top,
                     std::unordered_set<std::string>& keys) {
  for (Mask m = last + 1; m <= top; ++m) {
    bool ok = true;
    for (Mask c : chosen) {
      if ((c & ~m) == 0) {  // c ⊆ m
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(m);
    keys.insert(canonical_key_masks(n, chosen).bytes);
    grow_antichains(n, chosen, m, top, keys);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<CanonicalKey> enumerate_clutters(int n, int jobs) {
  if (n < 0 || n > 6)
    throw std::invalid_argument("exhaustive enumeration supports n <= 6");
  const Mask top = BitFace::full(n).bits();

  std::unordered_set<std::string> keys;
  // The two degenerate classes: no circuits, and the empty circuit alone.
  keys.insert(canonical_key_masks(n, std::vector<Mask>{}).bytes);
  keys.insert(canonical_key_masks(n, std::vector<Mask>{0}).bytes);

  if (jobs <= 1 || top == 0) {
    std::vector<Mask> chosen;
    grow_antichains(n, chosen, 0, top, keys);
  } else {
    // Shard the search tree by its first-level branches.
    const int workers = std::min<int>(jobs, static_cast<int>(top));
    std::vector<std::unordered_set<std::string>> local(
        static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    std::atomic<Mask> next{1};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        std::vector<Mask> chosen;
        for (Mask first = next.fetch_add(1); first <= top;
             first = next.fetch_add(1)) {
          chosen.assign(1, first);
          auto& sink = local[static_cast<std::size_t>(w)];
          sink.insert(canonical_key_masks(n, chosen).bytes);
          grow_antichains(n, chosen, first, top, sink);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& sink : local) keys.merge(sink);
  }

  std::vector<CanonicalKey> out;
  out.reserve(keys.size());
  for (const std::string& k : keys) out.push_back(CanonicalKey{k});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_forbidden_minor_to_chordality(const Clutter& c,
                                      ChordalityCache& cache) {
  if (c.n() == 0 || is_chordal(c, cache)) return false;
  for (int v = 0; v < c.n(); ++v) {
    if (!is_chordal(delete_vertex(c, v), cache)) return false;
    if (!is_chordal(contract_vertex(c, v), cache)) return false;
  }
  return true;
}

bool is_forbidden_subclutter(const Clutter& c, ChordalityCache& cache) {
  if (c.n() == 0 || is_chordal(c, cache)) return false;
  for (int v = 0; v < c.n(); ++v)
    if (!is_chordal(delete_vertex(c, v), cache)) return false;
  return true;
}

namespace {

// I(m) shellable for m and every minor of m; memoized on canonical keys.
bool all_minors_shellable(const Clutter& c, Caches& caches, Budget& budget) {
  const bool memoize = c.n() <= kMaxCanonicalVertices;
  std::string memo;
  if (memoize) {
    memo = canonical_key(c).bytes;
    if (auto hit = caches.minors_shellable.find(memo)) return *hit;
  }
  bool verdict = is_shellable(independence_complex(c), caches, budget);
  if (verdict && c.n() > 0) {
    for (int v = 0; v < c.n() && verdict; ++v) {
      if (!all_minors_shellable(delete_vertex(c, v), caches, budget))
        verdict = false;
      else if (!all_minors_shellable(contract_vertex(c, v), caches, budget))
        verdict = false;
    }
  }
  if (memoize) caches.minors_shellable.insert(memo, verdict);
  return verdict;
}

const CanonicalKey& c5_key() {
  static const CanonicalKey key = canonical_key(make_cycle_graph(5));
  return key;
}

// Chordal, or the 5-cycle with every deeper minor in the same class.
bool nonchordal_minors_all_c5(const Clutter& c, Caches& caches) {
  if (is_chordal(c, caches.chordal)) return true;
  if (c.n() != 5) return false;  // only the 5-cycle itself qualifies
  const CanonicalKey key = canonical_key(c);
  if (key != c5_key()) return false;
  const std::string& memo = key.bytes;
  if (auto hit = caches.minors_c5_closed.find(memo)) return *hit;
  bool verdict = true;
  for (int v = 0; v < c.n() && verdict; ++v) {
    if (!nonchordal_minors_all_c5(delete_vertex(c, v), caches)) verdict = false;
    else if (!nonchordal_minors_all_c5(contract_vertex(c, v), caches))
      verdict = false;
  }
  caches.minors_c5_closed.insert(memo, verdict);
  return verdict;
}

}  // namespace

ObstructionClass obstruction_class(const SimplicialComplex& d, Caches& caches,
                                   Budget& budget) {
  ObstructionClass out;
  if (is_shellable(d, caches, budget)) return out;

  out.d_obstruction = true;
  const Mask top = BitFace::full(d.n()).bits();
  for (Mask keep = 0; keep < top && out.d_obstruction; ++keep)
    if (!is_shellable(induced_subcomplex(d, BitFace(keep)), caches, budget))
      out.d_obstruction = false;

  out.c_obstruction = true;
  for (int v = 0; v < d.n() && out.c_obstruction; ++v) {
    if (!d.is_face(BitFace::single(v))) continue;  // void link is shellable
    if (!is_shellable(link(d, BitFace::single(v)), caches, budget))
      out.c_obstruction = false;
  }

  out.dc_obstruction = true;
  const Clutter nonfaces = nonface_clutter(d);
  for (int v = 0; v < nonfaces.n() && out.dc_obstruction; ++v) {
    if (!all_minors_shellable(delete_vertex(nonfaces, v), caches, budget))
      out.dc_obstruction = false;
    else if (!all_minors_shellable(contract_vertex(nonfaces, v), caches, budget))
      out.dc_obstruction = false;
  }
  return out;
}

ClassificationRecord classify(const Clutter& c, const ClassifyOptions& options,
                              Caches& caches) {
  ClassificationRecord r;
  r.n = c.n();
  if (c.n() <= kMaxCanonicalVertices) {
    r.key = canonical_key(c);
    r.circuits = decode_key(r.key).circuits();
  } else {
    r.circuits = c.circuits();  // no exact canonical form above 8 vertices
  }

  r.chordal = is_chordal(c, caches.chordal);
  r.forbidden_minor = is_forbidden_minor_to_chordality(c, caches.chordal);
  r.forbidden_subclutter = is_forbidden_subclutter(c, caches.chordal);

  // "Contains a 5-cycle minor but no other non-chordal minor": the clutter
  // itself counts as one of its minors, so it must lack a simplicial
  // vertex (with one it could never join the obstruction candidates:
  // shellability would follow from its minors).
  if (!r.chordal && !r.forbidden_minor && !has_simplicial_vertex(c)) {
    r.c5_only = true;
    for (int v = 0; v < c.n() && r.c5_only; ++v) {
      if (!nonchordal_minors_all_c5(delete_vertex(c, v), caches))
        r.c5_only = false;
      else if (!nonchordal_minors_all_c5(contract_vertex(c, v), caches))
        r.c5_only = false;
    }
  }

  const SimplicialComplex complex = independence_complex(c);
  r.h_negative = has_negative_h(fh_triangle(complex));
  r.sequentially_cm = is_sequentially_cm(complex, options.coefficients, caches);
  r.top_skeleton = sphere_signature(top_skeleton(complex), options.coefficients);

  Budget budget(options.budget_per_clutter);
  try {
    r.shellable = is_shellable(complex, caches, budget);
    r.obstruction = *r.shellable ? ObstructionClass{}
                                 : obstruction_class(complex, caches, budget);
  } catch (const BudgetExceeded&) {
    r.shellable.reset();
    r.obstruction = ObstructionClass{};
  }

  if (options.audit && r.shellable.has_value()) {
    Budget audit_budget(options.budget_per_clutter);
    try {
      const auto order = find_shelling(complex, audit_budget);
      const bool search_verdict =
          order.has_value() && is_valid_shelling(complex, *order);
      r.audit_agree = (search_verdict == *r.shellable);
    } catch (const BudgetExceeded&) {
      r.audit_agree.reset();
    }
  }
  return r;
}

SummaryCounts summarize(const std::vector<const ClassificationRecord*>& records) {
  SummaryCounts s;
  for (const ClassificationRecord* r : records) {
    ++s.total;
    if (r->chordal) ++s.chordal;
    if (!r->shellable.has_value()) {
      ++s.undecided;
    } else if (*r->shellable) {
      ++s.shellable;
    } else if (!r->h_negative) {
      ++s.h_anomalies;
    }
    if (r->sequentially_cm) ++s.sequentially_cm;
    if (r->forbidden_minor) {
      ++s.forbidden_minors;
      if (r->shellable.has_value()) {
        if (*r->shellable) ++s.forbidden_minors_shellable;
        else ++s.forbidden_minors_nonshellable;
      }
    }
    if (r->c5_only) {
      ++s.c5_only;
      if (r->shellable.has_value() && *r->shellable) ++s.c5_only_shellable;
    }
    if (r->obstruction.dc_obstruction) ++s.dc_obstructions;
  }
  return s;
}

PipelineResult run_pipeline(int n, const PipelineOptions& options,
                            Caches& caches) {
  PipelineResult result;
  const std::vector<CanonicalKey> keys = enumerate_clutters(n, options.jobs);

  result.records.resize(keys.size());
  ClassifyOptions classify_options{options.coefficients, options.audit,
                                   options.budget_per_clutter};

  auto work = [&](std::size_t i) {
    result.records[i] = classify(decode_key(keys[i]), classify_options, caches);
  };

  if (options.jobs <= 1) {
    for (std::size_t i = 0; i < keys.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < options.jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < keys.size();
             i = next.fetch_add(1))
          work(i);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<const ClassificationRecord*> all;
  std::vector<const ClassificationRecord*> covering;
  all.reserve(result.records.size());
  for (const ClassificationRecord& r : result.records) {
    all.push_back(&r);
    const Clutter c(r.n, r.circuits);
    if (c.support() == c.ground()) covering.push_back(&r);
    if (r.audit_agree.has_value() && !*r.audit_agree) ++result.audit_mismatches;
  }
  result.all = summarize(all);
  result.covering = summarize(covering);
  return result;
}

}  // namespace clutters
