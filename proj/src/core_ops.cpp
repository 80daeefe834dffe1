#include "clutters/core_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace clutters {

namespace {

void check_vertex(const Clutter& c, int v) {
  if (v < 0 || v >= c.n()) throw std::out_of_range("vertex index out of range");
}

std::vector<BitFace> reindex_all(const std::vector<BitFace>& faces, int v) {
  std::vector<BitFace> out;
  out.reserve(faces.size());
  for (BitFace f : faces) out.push_back(drop_vertex_reindex(f, v));
  return out;
}

// Reindexes onto `keep`: member i of keep becomes vertex i of the result.
BitFace compress(BitFace f, BitFace keep) {
  Mask out = 0;
  int idx = 0;
  for (int v : keep) {
    if (f.contains(v)) out |= Mask{1} << idx;
    ++idx;
  }
  return BitFace(out);
}

}  // namespace

Clutter delete_vertex(const Clutter& c, int v) {
  check_vertex(c, v);
  std::vector<BitFace> kept;
  for (BitFace e : c.circuits())
    if (!e.contains(v)) kept.push_back(drop_vertex_reindex(e, v));
  return Clutter(c.n() - 1, std::move(kept));
}

Clutter contract_vertex(const Clutter& c, int v) {
  check_vertex(c, v);
  std::vector<BitFace> stripped;
  stripped.reserve(c.circuits().size());
  for (BitFace e : c.circuits())
    stripped.push_back(drop_vertex_reindex(e.minus(v), v));
  return Clutter::minimal(c.n() - 1, std::move(stripped));
}

std::vector<Clutter> minors_one_step(const Clutter& c) {
  if (c.n() < 1) throw std::out_of_range("no vertex to delete or contract");
  std::vector<Clutter> out;
  out.reserve(2 * static_cast<std::size_t>(c.n()));
  for (int v = 0; v < c.n(); ++v) {
    out.push_back(delete_vertex(c, v));
    out.push_back(contract_vertex(c, v));
  }
  return out;
}

Clutter delete_vertices(const Clutter& c, BitFace s) {
  Clutter out = c;
  // Highest index first so lower indices stay valid.
  auto vs = s.members();
  for (auto it = vs.rbegin(); it != vs.rend(); ++it)
    out = delete_vertex(out, *it);
  return out;
}

Clutter contract_vertices(const Clutter& c, BitFace s) {
  Clutter out = c;
  auto vs = s.members();
  for (auto it = vs.rbegin(); it != vs.rend(); ++it)
    out = contract_vertex(out, *it);
  return out;
}

Clutter induced_subclutter(const Clutter& c, BitFace keep) {
  std::vector<BitFace> kept;
  for (BitFace e : c.circuits())
    if (e.subset_of(keep)) kept.push_back(compress(e, keep));
  return Clutter(keep.size(), std::move(kept));
}

Clutter augment_with_nonface(const Clutter& c, BitFace s) {
  if (!c.is_independent(s))
    throw std::invalid_argument("augmenting set contains a circuit");
  std::vector<BitFace> all = c.circuits();
  all.push_back(s);
  return Clutter::minimal(c.n(), std::move(all));
}

Clutter disjoint_union(const Clutter& c, const Clutter& d) {
  std::vector<BitFace> all = c.circuits();
  for (BitFace e : d.circuits()) all.push_back(BitFace(e.bits() << c.n()));
  return Clutter(c.n() + d.n(), std::move(all));
}

Clutter blocker(const Clutter& c) {
  // No circuits: the empty set is vacuously a transversal.
  if (c.no_circuits())
    return Clutter(c.n(), {BitFace()});
  // Nothing can meet the empty circuit.
  for (BitFace e : c.circuits())
    if (e.empty()) return Clutter(c.n(), {});
  // Incremental transversal computation: fold circuits in one at a time.
  std::vector<BitFace> trans = {BitFace()};
  for (BitFace e : c.circuits()) {
    std::vector<BitFace> next;
    next.reserve(trans.size() * static_cast<std::size_t>(e.size()));
    for (BitFace t : trans) {
      if (t.intersects(e)) {
        next.push_back(t);
        continue;
      }
      for (int v : e) next.push_back(t.plus(v));
    }
    trans = inclusion_minimal(std::move(next));
  }
  return Clutter(c.n(), std::move(trans));
}

SimplicialComplex independence_complex(const Clutter& c) {
  // Maximal independent sets are complements of minimal transversals.
  const Clutter b = blocker(c);
  std::vector<BitFace> facets;
  facets.reserve(b.circuits().size());
  for (BitFace t : b.circuits()) facets.push_back(c.ground() - t);
  return SimplicialComplex(c.n(), std::move(facets));
}

Clutter nonface_clutter(const SimplicialComplex& d) {
  // A set is a non-face iff it meets the complement of every facet.
  std::vector<BitFace> cofacets;
  cofacets.reserve(d.facets().size());
  for (BitFace f : d.facets()) cofacets.push_back(BitFace::full(d.n()) - f);
  return blocker(Clutter(d.n(), std::move(cofacets)));
}

SimplicialComplex link(const SimplicialComplex& d, BitFace s) {
  if (!d.is_face(s)) throw std::invalid_argument("link of a non-face");
  std::vector<BitFace> facets;
  for (BitFace f : d.facets())
    if (s.subset_of(f)) facets.push_back(compress(f - s, BitFace::full(d.n()) - s));
  return SimplicialComplex(d.n() - s.size(),
                           inclusion_maximal(std::move(facets)));
}

SimplicialComplex delete_face(const SimplicialComplex& d, BitFace s) {
  std::vector<BitFace> facets;
  for (BitFace f : d.facets()) {
    if (!s.subset_of(f)) {
      facets.push_back(f);
      continue;
    }
    // Maximal subsets of f avoiding s: drop one member of s each.
    for (int v : s) facets.push_back(f.minus(v));
  }
  return SimplicialComplex(d.n(), inclusion_maximal(std::move(facets)));
}

SimplicialComplex delete_vertex(const SimplicialComplex& d, int v) {
  if (v < 0 || v >= d.n()) throw std::out_of_range("vertex index out of range");
  std::vector<BitFace> facets;
  for (BitFace f : d.facets()) facets.push_back(f.minus(v));
  facets = inclusion_maximal(std::move(facets));
  return SimplicialComplex(d.n() - 1, reindex_all(facets, v));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& d, BitFace keep) {
  std::vector<BitFace> facets;
  for (BitFace f : d.facets()) facets.push_back(compress(f & keep, keep));
  return SimplicialComplex(keep.size(), inclusion_maximal(std::move(facets)));
}

SimplicialComplex join(const SimplicialComplex& d1, const SimplicialComplex& d2) {
  std::vector<BitFace> facets;
  facets.reserve(d1.facets().size() * d2.facets().size());
  for (BitFace f1 : d1.facets())
    for (BitFace f2 : d2.facets())
      facets.push_back(f1 | BitFace(f2.bits() << d1.n()));
  return SimplicialComplex(d1.n() + d2.n(), std::move(facets));
}

SimplicialComplex skeleton(const SimplicialComplex& d, int s, bool pure) {
  if (s < -1) throw std::invalid_argument("dimension below -1");
  std::vector<BitFace> faces;
  for (BitFace f : d.all_faces())
    if (f.size() == s + 1) faces.push_back(f);
  if (!pure) {
    // Facets of smaller cardinality stay maximal in the skeleton.
    for (BitFace f : d.facets())
      if (f.size() <= s) faces.push_back(f);
  }
  return SimplicialComplex(d.n(), std::move(faces));
}

SimplicialComplex top_skeleton(const SimplicialComplex& d) {
  if (d.is_void()) return d;
  return skeleton(d, d.dim(), true);
}

SimplicialComplex alexander_dual(const SimplicialComplex& d) {
  const Clutter nf = nonface_clutter(d);
  std::vector<BitFace> facets;
  facets.reserve(nf.circuits().size());
  for (BitFace e : nf.circuits()) facets.push_back(BitFace::full(d.n()) - e);
  return SimplicialComplex(d.n(), std::move(facets));
}

Clutter d_complement(const Clutter& c, int d) {
  if (d < 1 || d > c.n())
    throw std::invalid_argument("complement cardinality out of range");
  std::vector<BitFace> circuits;
  // Walk the d-subsets in increasing lexicographic order of member lists.
  std::vector<int> idx(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= Mask{1} << v;
    const BitFace f{m};
    if (!std::binary_search(c.circuits().begin(), c.circuits().end(), f))
      circuits.push_back(f);
    int i = d - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == c.n() - d + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < d; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return Clutter(c.n(), std::move(circuits));
}

SimplicialComplex restrict_to_support(const SimplicialComplex& d) {
  const BitFace s = d.support();
  if (s == d.ground()) return d;
  return induced_subcomplex(d, s);
}

Clutter restrict_to_support(const Clutter& c) {
  const BitFace s = c.support();
  if (s == c.ground()) return c;
  return induced_subclutter(c, s);
}

}  // namespace clutters
