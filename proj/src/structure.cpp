#include "clutters/structure.hpp"

#include <stdexcept>

#include "clutters/canonical.hpp"
#include "clutters/core_ops.hpp"

namespace clutters {

namespace {

void check_vertex(const Clutter& c, int v) {
  if (v < 0 || v >= c.n()) throw std::out_of_range("vertex index out of range");
}

bool some_circuit_inside(const Clutter& c, BitFace region) {
  for (BitFace e : c.circuits())
    if (e.subset_of(region)) return true;
  return false;
}

}  // namespace

bool is_simplicial_vertex(const Clutter& c, int v) {
  check_vertex(c, v);
  std::vector<BitFace> through;
  for (BitFace e : c.circuits())
    if (e.contains(v)) through.push_back(e);
  for (std::size_t i = 0; i < through.size(); ++i)
    for (std::size_t j = i + 1; j < through.size(); ++j)
      if (!some_circuit_inside(c, (through[i] | through[j]).minus(v)))
        return false;
  return true;
}

bool is_free_vertex(const Clutter& c, int v) {
  check_vertex(c, v);
  int count = 0;
  for (BitFace e : c.circuits())
    if (e.contains(v) && ++count > 1) return false;
  return count == 1;
}

bool is_complete_neighborhood_vertex(const Clutter& c, int v, int d) {
  check_vertex(c, v);
  if (c.uniform_cardinality() != d)
    throw std::invalid_argument("clutter is not d-uniform");
  BitFace s;
  for (BitFace e : c.circuits())
    if (e.contains(v)) s = s | e.minus(v);
  if (s.size() < d) return true;
  // Every d-subset of the neighborhood must be a circuit.
  const Clutter induced = induced_subclutter(c, s);
  return d_complement(induced, d).no_circuits();
}

VertexVerdict vertex_verdict(const Clutter& c, int v) {
  VertexVerdict out;
  out.vertex = v;
  out.simplicial = is_simplicial_vertex(c, v);
  out.free = is_free_vertex(c, v);
  const int d = c.uniform_cardinality();
  out.complete_neighborhood = d > 0 && is_complete_neighborhood_vertex(c, v, d);
  return out;
}

bool has_simplicial_vertex(const Clutter& c) {
  for (int v = 0; v < c.n(); ++v)
    if (is_simplicial_vertex(c, v)) return true;
  return false;
}

std::vector<std::pair<int, BitFace>> neighborhood_containment_pairs(
    const Clutter& c) {
  std::vector<std::pair<int, BitFace>> out;
  for (int v = 0; v < c.n(); ++v) {
    for (BitFace e : c.circuits()) {
      if (!e.contains(v)) continue;
      bool ok = true;
      for (BitFace e2 : c.circuits()) {
        if (e2 == e || !e2.contains(v)) continue;
        if (!some_circuit_inside(c, (e | e2).minus(v))) {
          ok = false;
          break;
        }
      }
      if (ok) out.emplace_back(v, e);
    }
  }
  return out;
}

bool is_chordal(const Clutter& c, ChordalityCache& cache) {
  if (c.degenerate()) return true;
  // Ground vertices outside every circuit are vacuously simplicial and do
  // not affect chordality of any minor; strip them for better memo reuse.
  const Clutter core =
      c.support() == c.ground() ? c : restrict_to_support(c);
  if (core.degenerate()) return true;

  // Memoization needs the exact canonical form; above that bound the
  // recursion runs uncached until its minors shrink into range.
  const bool memoize = core.n() <= kMaxCanonicalVertices;
  std::string key;
  if (memoize) {
    key = canonical_key(core).bytes;
    if (auto hit = cache.find(key)) return *hit;
  }

  bool verdict = has_simplicial_vertex(core);
  if (verdict) {
    for (int v = 0; v < core.n() && verdict; ++v) {
      if (!is_chordal(delete_vertex(core, v), cache)) verdict = false;
      else if (!is_chordal(contract_vertex(core, v), cache)) verdict = false;
    }
  }
  if (memoize) cache.insert(key, verdict);
  return verdict;
}

bool has_free_vertex_property(const Clutter& c) {
  Clutter cur = c;
  while (!cur.degenerate()) {
    int free = -1;
    BitFace circuit;
    for (int v = 0; v < cur.n() && free < 0; ++v) {
      int count = 0;
      for (BitFace e : cur.circuits()) {
        if (e.contains(v)) {
          ++count;
          circuit = e;
        }
      }
      if (count == 1) free = v;
    }
    if (free < 0) return false;
    bool strictly_contained = false;
    const BitFace rest = circuit.minus(free);
    for (BitFace e : cur.circuits())
      if (e != circuit && rest.proper_subset_of(e)) strictly_contained = true;
    cur = strictly_contained ? delete_vertex(cur, free)
                             : contract_vertex(cur, free);
  }
  return true;
}

bool is_matroid_circuit_clutter(const Clutter& c) {
  const auto& circuits = c.circuits();
  for (std::size_t i = 0; i < circuits.size(); ++i)
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const BitFace common = circuits[i] & circuits[j];
      for (int v : common)
        if (!some_circuit_inside(c, (circuits[i] | circuits[j]).minus(v)))
          return false;
    }
  return true;
}

bool graph_neighborhood_simplicial(const Clutter& g) {
  if (!g.no_circuits() && g.uniform_cardinality() != 2)
    throw std::invalid_argument("not a graph");
  const Mask top = BitFace::full(g.n()).bits();
  for (std::uint64_t m = 0; m <= top; ++m) {
    const BitFace a{static_cast<Mask>(m)};
    if (!g.is_independent(a)) continue;
    BitFace closed = a;
    for (BitFace e : g.circuits())
      if (e.intersects(a)) closed = closed | e;
    const BitFace keep = BitFace::full(g.n()) - closed;
    if (keep.empty()) continue;
    if (!has_simplicial_vertex(induced_subclutter(g, keep))) return false;
  }
  return true;
}

}  // namespace clutters
