#include "clutters/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "clutters/canonical.hpp"
#include "clutters/core_ops.hpp"

namespace clutters {

namespace {

// Rank of a sparse ±1 incidence matrix over the rationals, by Bareiss
// fraction-free elimination.  Intermediate entries are minors of the
// input, which stay tiny for complexes on few vertices; guarded anyway.
int rank_rationals(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  int rank = 0;
  long long prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        const __int128 num = static_cast<__int128>(m[row][col]) * m[i][j] -
                             static_cast<__int128>(m[i][col]) * m[row][j];
        const __int128 q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN)
          throw std::overflow_error("boundary-matrix elimination overflow");
        m[i][j] = static_cast<long long>(q);
      }
      m[i][col] = 0;
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

// Rank over GF(2); rows packed into 64-bit words.
int rank_gf2(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(
      rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] % 2 != 0) bits[i][j / 64] ^= std::uint64_t{1} << (j % 64);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = row;
    while (pivot < rows && !(bits[pivot][w] & bit)) ++pivot;
    if (pivot == rows) continue;
    std::swap(bits[row], bits[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != row && (bits[i][w] & bit))
        for (std::size_t k = 0; k < words; ++k) bits[i][k] ^= bits[row][k];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int matrix_rank(std::vector<std::vector<long long>> m, Field field) {
  return field == Field::rationals ? rank_rationals(std::move(m))
                                   : rank_gf2(m);
}

char field_tag(Field f) { return f == Field::rationals ? 'Q' : '2'; }

}  // namespace

bool HomologyProfile::all_zero() const {
  for (long long b : by_dim)
    if (b != 0) return false;
  return true;
}

long long HomologyProfile::reduced_euler() const {
  long long sum = 0;
  for (std::size_t i = 0; i < by_dim.size(); ++i) {
    const int dim = static_cast<int>(i) - 1;
    sum += (dim % 2 == 0) ? by_dim[i] : -by_dim[i];
  }
  return sum;
}

std::string HomologyProfile::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < by_dim.size(); ++i) {
    if (i > 0) out += ", ";
    out += "b(" + std::to_string(static_cast<int>(i) - 1) +
           ")=" + std::to_string(by_dim[i]);
  }
  return out + "]";
}

HomologyProfile reduced_homology(const SimplicialComplex& d,
                                 Field coefficients) {
  HomologyProfile profile;
  if (d.is_void()) return profile;

  // Faces grouped by cardinality; index of a face within its group gives
  // its column in the boundary matrix.
  const int top = d.dim() + 1;
  std::vector<std::vector<BitFace>> by_card(static_cast<std::size_t>(top) + 1);
  for (BitFace f : d.all_faces())
    by_card[static_cast<std::size_t>(f.size())].push_back(f);

  auto index_of = [&](int card, BitFace f) {
    const auto& v = by_card[static_cast<std::size_t>(card)];
    return static_cast<std::size_t>(
        std::lower_bound(v.begin(), v.end(), f) - v.begin());
  };

  // ranks[c] = rank of the boundary map from c-element faces down.
  std::vector<int> ranks(static_cast<std::size_t>(top) + 2, 0);
  for (int card = 1; card <= top; ++card) {
    const auto& domain = by_card[static_cast<std::size_t>(card)];
    const auto& codomain = by_card[static_cast<std::size_t>(card - 1)];
    std::vector<std::vector<long long>> m(
        codomain.size(), std::vector<long long>(domain.size(), 0));
    for (std::size_t j = 0; j < domain.size(); ++j) {
      int sign = 1;
      for (int v : domain[j]) {
        m[index_of(card - 1, domain[j].minus(v))][j] = sign;
        sign = -sign;
      }
    }
    ranks[static_cast<std::size_t>(card)] = matrix_rank(std::move(m), coefficients);
  }

  profile.by_dim.assign(static_cast<std::size_t>(top) + 1, 0);
  for (int card = 0; card <= top; ++card) {
    const auto faces = static_cast<long long>(
        by_card[static_cast<std::size_t>(card)].size());
    profile.by_dim[static_cast<std::size_t>(card)] =
        faces - ranks[static_cast<std::size_t>(card)] -
        ranks[static_cast<std::size_t>(card) + 1];
  }
  return profile;
}

namespace {

bool cohen_macaulay_impl(const SimplicialComplex& d, Field coefficients) {
  if (d.facets().size() <= 1) return true;
  for (BitFace sigma : d.all_faces()) {
    const SimplicialComplex lk = link(d, sigma);
    const int dim = lk.dim();
    if (dim <= 0 && lk.facets().size() <= 1) continue;
    const HomologyProfile profile = reduced_homology(lk, coefficients);
    for (int i = -1; i < dim; ++i)
      if (profile.betti(i) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& d, Field coefficients) {
  return cohen_macaulay_impl(d, coefficients);
}

bool is_cohen_macaulay(const SimplicialComplex& d, Field coefficients,
                       Caches& caches) {
  if (d.facets().size() <= 1) return true;
  const SimplicialComplex core = restrict_to_support(d);
  if (core.n() > kMaxCanonicalVertices)
    return cohen_macaulay_impl(core, coefficients);
  std::string memo = canonical_key(core).bytes;
  memo.push_back(field_tag(coefficients));
  if (auto hit = caches.cohen_macaulay.find(memo)) return *hit;
  const bool verdict = cohen_macaulay_impl(core, coefficients);
  caches.cohen_macaulay.insert(memo, verdict);
  return verdict;
}

namespace {

template <typename CmFn>
bool sequentially_cm_impl(const SimplicialComplex& d, CmFn&& cm) {
  if (d.facets().size() <= 1) return true;
  for (int s = 0; s <= d.dim(); ++s)
    if (!cm(skeleton(d, s, true))) return false;
  return true;
}

}  // namespace

bool is_sequentially_cm(const SimplicialComplex& d, Field coefficients) {
  return sequentially_cm_impl(d, [&](const SimplicialComplex& s) {
    return is_cohen_macaulay(s, coefficients);
  });
}

bool is_sequentially_cm(const SimplicialComplex& d, Field coefficients,
                        Caches& caches) {
  if (d.facets().size() <= 1) return true;
  const SimplicialComplex core = restrict_to_support(d);
  const bool memoize = core.n() <= kMaxCanonicalVertices;
  std::string memo;
  if (memoize) {
    memo = canonical_key(core).bytes;
    memo.push_back(field_tag(coefficients));
    if (auto hit = caches.sequentially_cm.find(memo)) return *hit;
  }
  const bool verdict =
      sequentially_cm_impl(core, [&](const SimplicialComplex& s) {
        return is_cohen_macaulay(s, coefficients, caches);
      });
  if (memoize) caches.sequentially_cm.insert(memo, verdict);
  return verdict;
}

SimplicialComplex free_face_collapse(const SimplicialComplex& d) {
  std::vector<BitFace> faces = d.all_faces();  // sorted by mask
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < faces.size() && !changed; ++i) {
      if (faces[i].empty()) continue;
      std::size_t cover = faces.size();
      int count = 0;
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if (j != i && faces[i].proper_subset_of(faces[j])) {
          cover = j;
          if (++count > 1) break;
        }
      }
      if (count == 1) {
        // Remove the larger index first so the smaller stays valid.
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(std::max(i, cover)));
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(std::min(i, cover)));
        changed = true;
      }
    }
  }
  return SimplicialComplex(d.n(), inclusion_maximal(std::move(faces)));
}

std::string SphereSignature::to_string() const {
  if (!dimension) return "not-a-homology-sphere";
  return "S" + std::to_string(*dimension);
}

SphereSignature sphere_signature(const SimplicialComplex& d,
                                 Field coefficients) {
  const HomologyProfile profile =
      reduced_homology(free_face_collapse(d), coefficients);
  SphereSignature out;
  for (std::size_t i = 0; i < profile.by_dim.size(); ++i) {
    if (profile.by_dim[i] == 0) continue;
    if (profile.by_dim[i] != 1 || out.dimension) return SphereSignature{};
    out.dimension = static_cast<int>(i) - 1;
  }
  return out;
}

}  // namespace clutters
