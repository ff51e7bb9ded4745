#ifndef IRRLAB_EXTREMAL_HPP
#define IRRLAB_EXTREMAL_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "irrlab/graph.hpp"
#include "irrlab/irregularity.hpp"

namespace irrlab {

// Largest total irregularity over all simple graphs of the given order:
// (2n^3 - 3n^2 - 2n)/12 for even n, (2n^3 - 3n^2 - 2n + 3)/12 for odd n.
// Guarded to kMaxExactOrder; evaluated with 128-bit intermediates.
std::int64_t max_total_irregularity(int order);

// Total irregularity of the extremal construction with q universal vertices:
// the maximum above minus (q^3 - q)/3. Equal for q = 0 and q = 1, strictly
// decreasing from q = 1 on. Requires 0 <= q <= (order-1)/2.
std::int64_t extremal_irr_t(int order, int universal_count);

// The extremal construction's vertex classes are the q universal vertices, a
// block of n-2q-1 non-universal vertices with pairwise distinct degrees, and
// a low block of q+1 vertices of degree q. Cross-class contributions to the
// pairwise sum (within-class terms vanish or cancel):
struct ContributionTerms {
  std::int64_t universal_vs_descending = 0;
  std::int64_t universal_vs_low = 0;
  std::int64_t descending_vs_low = 0;
  std::int64_t within_descending = 0;

  std::int64_t sum() const {
    return universal_vs_descending + universal_vs_low + descending_vs_low + within_descending;
  }
};

ContributionTerms contribution_terms(int order, int universal_count);

// Construction recipe: q universal vertices plus non-universal vertices
// labeled 1..n-q; non-universal i and j are adjacent when i + j is below the
// threshold n - 2q + 1, never adjacent above it, and free either way at it.
// optional_mask picks which of those free pairs are present (bit k = k-th
// pair of optional_pairs, ascending in i).
struct ExtremalSpec {
  int order = 0;
  int universal_count = 0;
  std::vector<bool> optional_mask;  // may be shorter than the pair count; missing bits are clear
};

// The free index pairs (i, j), i < j, i + j == order - 2*universal_count + 1.
// Toggling any of them leaves irr_t unchanged.
std::vector<std::pair<int, int>> optional_pairs(int order, int universal_count);

struct ExtremalGraph {
  ExtremalSpec spec;
  Graph graph;

  // Vertex carrying the k-th universal slot, k in [1, universal_count].
  int universal_vertex(int k) const;
  // Vertex carrying non-universal label i, i in [1, order - universal_count].
  int nonuniversal_vertex(int i) const;
};

ExtremalGraph construct_extremal(const ExtremalSpec& spec);

// All 2^(floor(n/2) - 1) optional-edge choices at q = 1, ascending by mask
// value. Every member attains max_total_irregularity(order) and the members'
// degree sequences are pairwise distinct. Requires order >= 4.
void for_each_extremal_family_member(int order, const std::function<void(const ExtremalGraph&)>& fn);
std::vector<ExtremalGraph> extremal_family(int order);

// CLI mask form: hexadecimal value whose bit k selects the k-th optional pair.
std::vector<bool> mask_from_hex(const std::string& hex, std::size_t bit_count);
std::string mask_to_hex(const std::vector<bool>& mask);

// Trees. Among trees of a given order the star alone maximizes irr_t.
Graph star(int order);                     // K_{1, order-1}
std::int64_t tree_max(int order);          // (order-1)(order-2)

// One improvement step toward the star: detach the lowest-index pendant not
// already adjacent to the lowest-index maximum-degree vertex and reattach it
// there. Raises irr_t by at least 2 on every non-star tree.
Graph pendant_shift(const Graph& tree);

// Iterated pendant shifts from the given tree to the star; the result starts
// with the input and ends with the star, taking at most `order` steps.
std::vector<Graph> star_ascent(const Graph& tree);

}  // namespace irrlab

#endif  // IRRLAB_EXTREMAL_HPP
