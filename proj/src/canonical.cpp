#include "clutters/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "clutters/core_ops.hpp"

namespace clutters {

namespace {

constexpr int kMaxCanonicalN = kMaxCanonicalVertices;

// For each permutation of [n], a lookup table mapping any mask over n bits
// to its image.  Built once per n and shared; n <= 7 keeps the tables small
// (5040 * 128 words).  n == 8 maps masks bit by bit instead.
struct PermTables {
  std::vector<std::vector<Mask>> tables;
};

const PermTables& perm_tables(int n) {
  static std::array<PermTables, 8> cache;  // n = 0..7
  static std::array<std::once_flag, 8> once;
  auto& slot = cache[static_cast<std::size_t>(n)];
  std::call_once(once[static_cast<std::size_t>(n)], [&slot, n] {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const Mask top = BitFace::full(n).bits();
    do {
      std::vector<Mask> table(static_cast<std::size_t>(top) + 1);
      for (Mask m = 0; m <= top; ++m) {
        Mask image = 0;
        for (Mask rest = m; rest != 0; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          image |= Mask{1} << perm[static_cast<std::size_t>(v)];
        }
        table[m] = image;
        if (m == top) break;
      }
      slot.tables.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return slot;
}

Mask map_mask(Mask m, std::span<const int> perm) {
  Mask image = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1)
    image |= Mask{1} << perm[static_cast<std::size_t>(std::countr_zero(rest))];
  return image;
}

std::string encode(int n, std::span<const Mask> sorted) {
  std::string out;
  out.reserve(3 + 4 * sorted.size());
  out.push_back(static_cast<char>(n));
  out.push_back(static_cast<char>(sorted.size() >> 8));
  out.push_back(static_cast<char>(sorted.size() & 0xff));
  for (Mask m : sorted) {
    out.push_back(static_cast<char>((m >> 24) & 0xff));
    out.push_back(static_cast<char>((m >> 16) & 0xff));
    out.push_back(static_cast<char>((m >> 8) & 0xff));
    out.push_back(static_cast<char>(m & 0xff));
  }
  return out;
}

}  // namespace

CanonicalKey canonical_key_masks(int n, std::span<const Mask> circuits) {
  if (n < 0 || n > kMaxCanonicalN)
    throw std::invalid_argument("exact canonicalization supports n <= 8 only");
  const std::size_t m = circuits.size();
  if (m == 0 || n <= 1) return CanonicalKey{encode(n, circuits)};

  std::vector<Mask> best(circuits.begin(), circuits.end());
  std::vector<Mask> cand(m);

  auto consider = [&](auto&& map_one) {
    Mask low = ~Mask{0};
    for (std::size_t i = 0; i < m; ++i) {
      cand[i] = map_one(circuits[i]);
      low = std::min(low, cand[i]);
    }
    // The sorted candidate starts with its minimum; a larger minimum can
    // never beat the current best, so skip the sort.
    if (low > best[0]) return;
    for (std::size_t i = 1; i < m; ++i) {  // insertion sort; m is tiny
      const Mask x = cand[i];
      std::size_t j = i;
      while (j > 0 && cand[j - 1] > x) {
        cand[j] = cand[j - 1];
        --j;
      }
      cand[j] = x;
    }
    if (cand < best) best = cand;
  };

  if (n <= 7) {
    for (const auto& table : perm_tables(n).tables)
      consider([&table](Mask x) { return table[x]; });
  } else {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      consider([&perm](Mask x) { return map_mask(x, perm); });
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return CanonicalKey{encode(n, best)};
}

CanonicalKey canonical_key(const Clutter& c) {
  std::vector<Mask> masks;
  masks.reserve(c.circuits().size());
  for (BitFace e : c.circuits()) masks.push_back(e.bits());
  return canonical_key_masks(c.n(), masks);
}

CanonicalKey canonical_key(const SimplicialComplex& d) {
  return canonical_key(nonface_clutter(d));
}

Clutter decode_key(const CanonicalKey& key) {
  const std::string& b = key.bytes;
  if (b.size() < 3) throw std::invalid_argument("truncated canonical key");
  const int n = static_cast<unsigned char>(b[0]);
  const std::size_t m = (static_cast<std::size_t>(static_cast<unsigned char>(b[1])) << 8) |
                        static_cast<unsigned char>(b[2]);
  if (b.size() != 3 + 4 * m) throw std::invalid_argument("bad canonical key length");
  std::vector<BitFace> circuits;
  circuits.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Mask mask = 0;
    for (int j = 0; j < 4; ++j)
      mask = (mask << 8) | static_cast<unsigned char>(b[3 + 4 * i + static_cast<std::size_t>(j)]);
    circuits.push_back(BitFace(mask));
  }
  return Clutter(n, std::move(circuits));
}

std::string to_hex(const CanonicalKey& key) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(key.bytes.size() * 2);
  for (char c : key.bytes) {
    const auto u = static_cast<unsigned char>(c);
    out.push_back(digits[u >> 4]);
    out.push_back(digits[u & 0xf]);
  }
  return out;
}

Clutter relabel(const Clutter& c, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != c.n())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<BitFace> circuits;
  circuits.reserve(c.circuits().size());
  for (BitFace e : c.circuits()) circuits.push_back(BitFace(map_mask(e.bits(), perm)));
  return Clutter(c.n(), std::move(circuits));
}

}  // namespace clutters
