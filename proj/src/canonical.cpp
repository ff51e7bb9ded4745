#include "irrlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <vector>

#include "irrlab/graph6.hpp"

namespace irrlab {

namespace {

constexpr int kMaxCanonicalOrder = 8;  // 8! relabelings, 28 adjacency bits

// Payload index of pair (i, j), i < j, in graph6 column-major order.
int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

// Masks pack payload bit k at position (nbits - 1 - k), so unsigned
// comparison of masks is lexicographic comparison of the bit strings.
struct CanonTables {
  int nbits = 0;
  // One map per permutation: encoded bit position -> encoded bit position.
  std::vector<std::vector<std::uint8_t>> maps;
};

const CanonTables& tables_for(int n) {
  static std::array<CanonTables, kMaxCanonicalOrder + 1> tables;
  static std::array<std::once_flag, kMaxCanonicalOrder + 1> built;
  std::call_once(built[n], [n] {
    CanonTables& t = tables[n];
    t.nbits = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint8_t> map(t.nbits);
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          int pi = perm[i], pj = perm[j];
          if (pi > pj) std::swap(pi, pj);
          map[t.nbits - 1 - pair_index(i, j)] =
              static_cast<std::uint8_t>(t.nbits - 1 - pair_index(pi, pj));
        }
      }
      t.maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return tables[n];
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder)
    throw Error(errc::order_too_large,
                "canonical form enumerates all relabelings; order must be <= " +
                    std::to_string(kMaxCanonicalOrder) + ", got " + std::to_string(n));
  if (n <= 1) return to_graph6(g);

  const CanonTables& t = tables_for(n);
  std::uint32_t start = 0;
  for (const auto& [i, j] : g.edges()) start |= std::uint32_t{1} << (t.nbits - 1 - pair_index(i, j));

  std::uint32_t best = start;
  for (const auto& map : t.maps) {
    std::uint32_t out = 0;
    for (std::uint32_t m = start; m != 0; m &= m - 1)
      out |= std::uint32_t{1} << map[std::countr_zero(m)];
    best = std::min(best, out);
  }

  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (best & (std::uint32_t{1} << (t.nbits - 1 - pair_index(i, j)))) edges.emplace_back(i, j);
  return to_graph6(Graph::from_edge_list(n, edges));
}

}  // namespace irrlab
