#include "irrlab/irregularity.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace irrlab {

namespace {

std::int64_t accumulate_sorted(std::span<const int> d) {
  const std::int64_t n = static_cast<std::int64_t>(d.size());
  if (n > kMaxExactOrder)
    throw Error(errc::overflow_guard, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxExactOrder));
  __int128 acc = 0;
  for (std::int64_t i = 0; i < n; ++i) acc += static_cast<__int128>(n - 2 * i - 1) * d[i];
  if (acc < 0 || acc > std::numeric_limits<std::int64_t>::max())
    throw Error(errc::overflow_guard, "sequence value exceeds 64-bit range");
  return static_cast<std::int64_t>(acc);
}

// Contribution of vertex x against the rest when its degree moves by s.
std::int64_t endpoint_delta(const std::vector<int>& deg, int x, int other, int s) {
  std::int64_t delta = 0;
  const int dx = deg[x];
  for (int w = 0; w < static_cast<int>(deg.size()); ++w) {
    if (w == x || w == other) continue;
    delta += std::abs(dx + s - deg[w]) - std::abs(dx - deg[w]);
  }
  return delta;
}

std::int64_t toggle_delta(const Graph& g, int u, int v, int s) {
  const std::vector<int> deg = g.degrees();
  // Both endpoints move by s together, so the u-v term itself is unchanged.
  return endpoint_delta(deg, u, v, s) + endpoint_delta(deg, v, u, s);
}

}  // namespace

std::int64_t irr(const Graph& g) {
  const std::vector<int> deg = g.degrees();
  std::int64_t sum = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) sum += std::abs(deg[u] - deg[v]);
  return sum;
}

std::int64_t irr_t(const Graph& g) {
  const std::vector<int> deg = g.degrees();
  const int n = g.order();
  std::int64_t sum = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) sum += std::abs(deg[u] - deg[v]);
  return sum;
}

std::int64_t irr_t_of_sequence(const DegreeSequence& d) {
  return accumulate_sorted(d.values());
}

std::int64_t irr_t_of_sequence(std::span<const int> non_increasing) {
  for (std::size_t i = 1; i < non_increasing.size(); ++i)
    if (non_increasing[i] > non_increasing[i - 1])
      throw Error(errc::not_sorted, "sequence must be non-increasing");
  return accumulate_sorted(non_increasing);
}

std::int64_t irr_t_delta_add(const Graph& g, int u, int v) {
  if (u == v) throw Error(errc::loop_edge, "(" + std::to_string(u) + ", " + std::to_string(v) + ")");
  if (g.has_edge(u, v))
    throw Error(errc::edge_present, "(" + std::to_string(u) + ", " + std::to_string(v) + ")");
  return toggle_delta(g, u, v, +1);
}

std::int64_t irr_t_delta_remove(const Graph& g, int u, int v) {
  if (u == v || !g.has_edge(u, v))
    throw Error(errc::edge_absent, "(" + std::to_string(u) + ", " + std::to_string(v) + ")");
  return toggle_delta(g, u, v, -1);
}

IrregularityReport analyze(const Graph& g) {
  IrregularityReport r;
  r.n = g.order();
  r.m = g.size();
  r.irr = irr(g);
  r.irr_t = irr_t(g);
  r.degree_sequence = degree_sequence(g);
  return r;
}

}  // namespace irrlab
