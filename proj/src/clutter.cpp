#include "clutters/clutter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clutters {

namespace {

void check_ground(int n, const std::vector<BitFace>& faces, const char* what) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("ground-set size out of range [0, 32]");
  const BitFace ground = BitFace::full(n);
  for (BitFace f : faces)
    if (!f.subset_of(ground))
      throw std::invalid_argument(std::string(what) + " outside ground set");
}

std::vector<BitFace> sort_unique(std::vector<BitFace> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

// With faces sorted by mask value, a proper subset always precedes its
// superset, so one triangular scan suffices.
void check_antichain(const std::vector<BitFace>& sorted, const char* what) {
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (sorted[i].proper_subset_of(sorted[j]))
        throw std::invalid_argument(std::string(what) +
                                    " violate the antichain condition");
}

}  // namespace

std::vector<BitFace> inclusion_minimal(std::vector<BitFace> faces) {
  faces = sort_unique(std::move(faces));
  std::vector<BitFace> out;
  out.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < i && minimal; ++j)
      if (faces[j].subset_of(faces[i])) minimal = false;
    if (minimal) out.push_back(faces[i]);
  }
  return out;
}

std::vector<BitFace> inclusion_maximal(std::vector<BitFace> faces) {
  faces = sort_unique(std::move(faces));
  std::vector<BitFace> out;
  out.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size() && maximal; ++j)
      if (faces[i].proper_subset_of(faces[j])) maximal = false;
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

Clutter::Clutter(int n, std::vector<BitFace> circuits) : n_(n) {
  check_ground(n, circuits, "circuits");
  circuits_ = sort_unique(std::move(circuits));
  check_antichain(circuits_, "circuits");
}

Clutter Clutter::minimal(int n, std::vector<BitFace> faces) {
  check_ground(n, faces, "circuits");
  Clutter c;
  c.n_ = n;
  c.circuits_ = inclusion_minimal(std::move(faces));
  return c;
}

bool Clutter::is_independent(BitFace s) const {
  for (BitFace e : circuits_)
    if (e.subset_of(s)) return false;
  return true;
}

BitFace Clutter::support() const {
  Mask m = 0;
  for (BitFace e : circuits_) m |= e.bits();
  return BitFace(m);
}

int Clutter::uniform_cardinality() const {
  if (circuits_.empty()) return -1;
  const int d = circuits_.front().size();
  for (BitFace e : circuits_)
    if (e.size() != d) return -1;
  return d;
}

int Clutter::max_circuit_cardinality() const {
  int k = 0;
  for (BitFace e : circuits_) k = std::max(k, e.size());
  return k;
}

int Clutter::min_circuit_cardinality() const {
  int k = kMaxVertices + 1;
  for (BitFace e : circuits_) k = std::min(k, e.size());
  return circuits_.empty() ? 0 : k;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<BitFace> facets)
    : n_(n) {
  check_ground(n, facets, "facets");
  facets_ = sort_unique(std::move(facets));
  check_antichain(facets_, "facets");
}

SimplicialComplex SimplicialComplex::generated_by(int n,
                                                  std::vector<BitFace> faces) {
  check_ground(n, faces, "facets");
  return SimplicialComplex(n, inclusion_maximal(std::move(faces)));
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (BitFace f : facets_) d = std::max(d, f.size() - 1);
  return d;
}

bool SimplicialComplex::is_face(BitFace s) const {
  for (BitFace f : facets_)
    if (s.subset_of(f)) return true;
  return false;
}

std::vector<BitFace> SimplicialComplex::all_faces() const {
  std::vector<BitFace> out;
  for (BitFace f : facets_) {
    // Enumerate all submasks of the facet.
    Mask m = f.bits();
    Mask sub = m;
    while (true) {
      out.push_back(BitFace(sub));
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  return sort_unique(std::move(out));
}

BitFace SimplicialComplex::support() const {
  Mask m = 0;
  for (BitFace f : facets_) m |= f.bits();
  return BitFace(m);
}

bool SimplicialComplex::pure() const {
  for (BitFace f : facets_)
    if (f.size() != facets_.front().size()) return false;
  return true;
}

LabeledGround LabeledGround::numeric(int n) {
  LabeledGround g;
  g.labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) g.labels.push_back(std::to_string(i));
  return g;
}

}  // namespace clutters
