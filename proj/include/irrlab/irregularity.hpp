#ifndef IRRLAB_IRREGULARITY_HPP
#define IRRLAB_IRREGULARITY_HPP

#include <cstdint>
#include <span>

#include "irrlab/degree_sequence.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

// Largest order for which the cubic closed forms and sequence evaluations
// stay inside the signed 64-bit range. Intermediates use 128-bit arithmetic;
// the final values at this order are about 1.3e18.
inline constexpr int kMaxExactOrder = 2'000'000;

// Sum of |deg(u) - deg(v)| over the edges of g.
std::int64_t irr(const Graph& g);

// Sum of |deg(u) - deg(v)| over unordered vertex pairs of g, i.e. half the
// sum over ordered pairs. Computed by direct pairwise summation.
std::int64_t irr_t(const Graph& g);

// Same value from the sorted sequence alone in linear time: position i
// (1-based) of a non-increasing sequence contributes (n - 2i + 1) * d_i.
std::int64_t irr_t_of_sequence(const DegreeSequence& d);
std::int64_t irr_t_of_sequence(std::span<const int> non_increasing);

// Change of irr_t when the edge uv is added to / removed from g, computed in
// O(n) from the degree multiset. The |deg(u) - deg(v)| term is unaffected
// because both endpoint degrees move together.
std::int64_t irr_t_delta_add(const Graph& g, int u, int v);
std::int64_t irr_t_delta_remove(const Graph& g, int u, int v);

struct IrregularityReport {
  int n = 0;
  std::int64_t m = 0;
  std::int64_t irr = 0;
  std::int64_t irr_t = 0;
  DegreeSequence degree_sequence;
};

IrregularityReport analyze(const Graph& g);

}  // namespace irrlab

#endif  // IRRLAB_IRREGULARITY_HPP
