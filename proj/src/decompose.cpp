#include "clutters/decompose.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "clutters/canonical.hpp"
#include "clutters/core_ops.hpp"

namespace clutters {

namespace {

// Facets of (star s) ∖ s: drop one member of s from each facet containing s.
std::vector<BitFace> star_minus_face_facets(const SimplicialComplex& d,
                                            BitFace s) {
  std::vector<BitFace> out;
  for (BitFace f : d.facets()) {
    if (!s.subset_of(f)) continue;
    for (int v : s) out.push_back(f.minus(v));
  }
  return inclusion_maximal(std::move(out));
}

bool intersect_sorted(const std::vector<BitFace>& a,
                      const std::vector<BitFace>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return false;
}

void check_shedding_args(const SimplicialComplex& d, BitFace s) {
  if (s.empty()) throw std::invalid_argument("shedding face must be nonempty");
  if (!d.is_face(s)) throw std::invalid_argument("shedding face must be a face");
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

bool decide_k_decomposable(const SimplicialComplex& d, int k, Caches& caches,
                           Budget& budget);

// Candidate shedding faces in the search order: smallest dimension first,
// ties by mask value.
std::vector<BitFace> candidate_faces(const SimplicialComplex& d, int max_card) {
  std::vector<BitFace> faces;
  for (BitFace f : d.all_faces())
    if (!f.empty() && f.size() <= max_card) faces.push_back(f);
  std::stable_sort(faces.begin(), faces.end(),
                   [](BitFace a, BitFace b) { return a.size() < b.size(); });
  return faces;
}

}  // namespace

bool is_shedding_face(const SimplicialComplex& d, BitFace s) {
  check_shedding_args(d, s);
  const std::vector<BitFace> star_side = star_minus_face_facets(d, s);
  const std::vector<BitFace> deletion_side = delete_face(d, s).facets();
  return !intersect_sorted(star_side, deletion_side);
}

bool is_shedding_face_exchange(const SimplicialComplex& d, BitFace s) {
  check_shedding_args(d, s);
  for (BitFace tau : d.all_faces()) {
    if (!s.subset_of(tau)) continue;
    for (int v : s) {
      bool exchanged = false;
      for (int w = 0; w < d.n() && !exchanged; ++w) {
        if (tau.contains(w)) continue;
        if (d.is_face(tau.minus(v).plus(w))) exchanged = true;
      }
      if (!exchanged) return false;
    }
  }
  return true;
}

int SheddingTree::max_face_dimension() const {
  if (kind != Kind::shed) return -1;
  int best = face.size() - 1;
  if (link_branch) best = std::max(best, link_branch->max_face_dimension());
  if (deletion_branch)
    best = std::max(best, deletion_branch->max_face_dimension());
  return best;
}

namespace {

bool decide_k_decomposable(const SimplicialComplex& d0, int k, Caches& caches,
                           Budget& budget) {
  budget.charge();
  if (d0.facets().size() <= 1) return true;  // degenerate or a simplex
  const SimplicialComplex d = restrict_to_support(d0);
  const int kk = std::min(k, d.dim());
  if (kk < 0) return false;

  const bool memoize = d.n() <= kMaxCanonicalVertices;
  std::string memo;
  if (memoize) {
    memo = canonical_key(d).bytes;
    memo.push_back(static_cast<char>(kk));
    if (auto hit = caches.decomposable.find(memo)) return *hit;
  }

  bool verdict = false;
  for (BitFace s : candidate_faces(d, kk + 1)) {
    if (!is_shedding_face(d, s)) continue;
    if (decide_k_decomposable(link(d, s), k, caches, budget) &&
        decide_k_decomposable(delete_face(d, s), k, caches, budget)) {
      verdict = true;
      break;
    }
  }
  if (memoize) caches.decomposable.insert(memo, verdict);
  return verdict;
}

std::unique_ptr<SheddingTree> build_certificate(const SimplicialComplex& d0,
                                                int k, Caches& caches,
                                                Budget& budget) {
  auto node = std::make_unique<SheddingTree>();
  if (d0.is_void() || d0.is_empty_complex()) {
    node->kind = SheddingTree::Kind::degenerate;
    return node;
  }
  if (d0.facets().size() == 1) {
    node->kind = SheddingTree::Kind::simplex;
    return node;
  }
  const SimplicialComplex d = restrict_to_support(d0);
  const int kk = std::min(k, d.dim());
  for (BitFace s : candidate_faces(d, kk + 1)) {
    if (!is_shedding_face(d, s)) continue;
    const SimplicialComplex lk = link(d, s);
    const SimplicialComplex del = delete_face(d, s);
    if (decide_k_decomposable(lk, k, caches, budget) &&
        decide_k_decomposable(del, k, caches, budget)) {
      node->kind = SheddingTree::Kind::shed;
      node->face = s;
      node->link_branch = build_certificate(lk, k, caches, budget);
      node->deletion_branch = build_certificate(del, k, caches, budget);
      return node;
    }
  }
  return nullptr;
}

}  // namespace

bool is_k_decomposable(const SimplicialComplex& d, int k, Caches& caches,
                       Budget& budget) {
  if (k < -1) throw std::invalid_argument("k must be at least -1");
  return decide_k_decomposable(d, k, caches, budget);
}

std::unique_ptr<SheddingTree> shedding_certificate(const SimplicialComplex& d,
                                                   int k, Caches& caches,
                                                   Budget& budget) {
  if (!is_k_decomposable(d, k, caches, budget)) return nullptr;
  return build_certificate(d, k, caches, budget);
}

bool replay_certificate(const SimplicialComplex& d, const SheddingTree& tree,
                        int k) {
  switch (tree.kind) {
    case SheddingTree::Kind::degenerate:
      return d.is_void() || d.is_empty_complex();
    case SheddingTree::Kind::simplex:
      return d.facets().size() == 1;
    case SheddingTree::Kind::shed:
      break;
  }
  // Certificates are expressed against the support-restricted complex
  // (restriction does not change the face structure).
  const SimplicialComplex core = restrict_to_support(d);
  if (tree.face.empty() || tree.face.size() > k + 1 || !core.is_face(tree.face))
    return false;
  if (!is_shedding_face(core, tree.face)) return false;
  if (!tree.link_branch || !tree.deletion_branch) return false;
  return replay_certificate(link(core, tree.face), *tree.link_branch, k) &&
         replay_certificate(delete_face(core, tree.face),
                            *tree.deletion_branch, k);
}

std::optional<int> min_decomposability(const SimplicialComplex& d,
                                       Caches& caches, Budget& budget) {
  if (d.facets().size() <= 1) return -1;
  for (int k = 0; k <= d.dim(); ++k)
    if (is_k_decomposable(d, k, caches, budget)) return k;
  return std::nullopt;
}

std::optional<std::vector<BitFace>> find_shelling(const SimplicialComplex& d,
                                                  Budget& budget) {
  const std::size_t count = d.facets().size();
  if (count <= 1)
    return std::vector<BitFace>(d.facets().begin(), d.facets().end());
  if (count > 64)
    throw std::invalid_argument("shelling search supports at most 64 facets");

  // Weakly decreasing dimension order suffices for shellability, so sort
  // candidates big-to-small and never let the size increase again.
  std::vector<BitFace> facets = d.facets();
  std::sort(facets.begin(), facets.end(), [](BitFace a, BitFace b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });

  // Whether facet i may follow the already-placed set: every intersection
  // with a placed facet must lie inside one of codimension one.
  auto can_append = [&facets](std::uint64_t placed, std::size_t i) {
    const int target = facets[i].size() - 1;
    for (std::uint64_t rest = placed; rest != 0; rest &= rest - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(rest));
      const BitFace m = facets[i] & facets[j];
      if (m.size() == target) continue;
      bool covered = false;
      for (std::uint64_t r2 = placed; r2 != 0 && !covered; r2 &= r2 - 1) {
        const auto h = static_cast<std::size_t>(std::countr_zero(r2));
        const BitFace mh = facets[i] & facets[h];
        if (mh.size() == target && m.subset_of(mh)) covered = true;
      }
      if (!covered) return false;
    }
    return true;
  };

  std::unordered_set<std::uint64_t> dead_states;
  std::vector<std::size_t> order;
  order.reserve(count);

  auto dfs = [&](auto&& self, std::uint64_t placed, int min_size) -> bool {
    budget.charge();
    if (order.size() == count) return true;
    if (dead_states.contains(placed)) return false;
    for (std::size_t i = 0; i < count; ++i) {
      if (placed & (std::uint64_t{1} << i)) continue;
      if (facets[i].size() > min_size) continue;
      if (!can_append(placed, i)) continue;
      order.push_back(i);
      if (self(self, placed | (std::uint64_t{1} << i), facets[i].size()))
        return true;
      order.pop_back();
    }
    dead_states.insert(placed);
    return false;
  };

  if (!dfs(dfs, 0, kMaxVertices + 1)) return std::nullopt;
  std::vector<BitFace> out;
  out.reserve(count);
  for (std::size_t i : order) out.push_back(facets[i]);
  return out;
}

bool is_valid_shelling(const SimplicialComplex& d,
                       std::span<const BitFace> order) {
  std::vector<BitFace> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted != d.facets()) return false;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int target = order[i].size() - 1;
    for (std::size_t j = 0; j < i; ++j) {
      const BitFace m = order[i] & order[j];
      if (m.size() == target) continue;
      bool covered = false;
      for (std::size_t h = 0; h < i && !covered; ++h) {
        const BitFace mh = order[i] & order[h];
        if (mh.size() == target && m.subset_of(mh)) covered = true;
      }
      if (!covered) return false;
    }
  }
  return true;
}

FHTriangle fh_triangle(const SimplicialComplex& d) {
  const int cards = d.is_void() ? 1 : d.dim() + 2;  // rows 0..max cardinality
  FHTriangle t;
  t.f.assign(static_cast<std::size_t>(cards),
             std::vector<long long>(static_cast<std::size_t>(cards), 0));
  t.h = t.f;
  for (BitFace face : d.all_faces()) {
    int degree = 0;
    for (BitFace f : d.facets())
      if (face.subset_of(f)) degree = std::max(degree, f.size());
    t.f[static_cast<std::size_t>(degree)][static_cast<std::size_t>(face.size())] += 1;
  }
  for (int i = 0; i < cards; ++i)
    for (int j = 0; j <= i; ++j) {
      long long sum = 0;
      for (int k = 0; k <= j; ++k) {
        const long long term =
            binomial(i - k, j - k) *
            t.f[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        sum += ((j - k) % 2 == 0) ? term : -term;
      }
      t.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum;
    }
  return t;
}

bool has_negative_h(const FHTriangle& t) {
  for (const auto& row : t.h)
    for (long long x : row)
      if (x < 0) return true;
  return false;
}

bool is_shellable(const SimplicialComplex& d, Caches& caches, Budget& budget) {
  if (d.facets().size() <= 1) return true;
  const SimplicialComplex core = restrict_to_support(d);
  const bool memoize = core.n() <= kMaxCanonicalVertices;
  std::string memo;
  if (memoize) {
    memo = canonical_key(core).bytes;
    memo.push_back(static_cast<char>(core.dim()));
    if (auto hit = caches.decomposable.find(memo)) return *hit;
  }
  if (has_negative_h(fh_triangle(core))) {
    if (memoize) caches.decomposable.insert(memo, false);
    return false;
  }
  return is_k_decomposable(core, core.dim(), caches, budget);
}

}  // namespace clutters
