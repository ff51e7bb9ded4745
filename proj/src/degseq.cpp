#include "irrlab/degseq.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace irrlab {

namespace {

// Core Erdos-Gallai check over a non-increasing vector with entries in
// [0, n-1]. The tail sum of min(d_i, k) splits at t = max(k, #{d_i >= k}):
// entries before t contribute k each, entries from t on contribute d_i.
bool eg_graphical(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
  if (prefix[n] % 2 != 0) return false;

  for (int k = 1; k <= n; ++k) {
    const auto ge_end = std::partition_point(d.begin(), d.end(), [k](int x) { return x >= k; });
    const int t = std::max<int>(k, static_cast<int>(ge_end - d.begin()));
    const std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1) +
                             static_cast<std::int64_t>(k) * (t - k) + (prefix[n] - prefix[t]);
    if (prefix[k] > rhs) return false;
  }
  return true;
}

}  // namespace

bool is_graphical(const DegreeSequence& d) { return eg_graphical(d.values()); }

Graph realize(const DegreeSequence& d) {
  if (!is_graphical(d)) throw Error(errc::not_graphical, "sequence fails the Erdos-Gallai conditions");

  const int n = d.order();
  // (remaining degree, vertex), re-sorted each round; index breaks ties so
  // the construction is reproducible.
  std::vector<std::pair<int, int>> rem(n);
  for (int v = 0; v < n; ++v) rem[v] = {d.values()[v], v};

  std::vector<std::pair<int, int>> edges;
  for (;;) {
    std::sort(rem.begin(), rem.end(),
              [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    const auto [dv, v] = rem.front();
    if (dv == 0) break;
    for (int i = 1; i <= dv; ++i) {
      edges.emplace_back(v, rem[i].second);
      --rem[i].first;
    }
    rem.front().first = 0;
  }
  return Graph::from_edge_list(n, edges);
}

GraphicalSequenceStream::GraphicalSequenceStream(int order)
    : GraphicalSequenceStream(order, order > 0 ? order - 1 : 0, 0) {}

GraphicalSequenceStream::GraphicalSequenceStream(int order, int first_hi, int first_lo)
    : n_(order), first_lo_(first_lo) {
  if (order < 0) throw Error(errc::order_too_small, "negative order");
  if (order > 0 && (first_lo < 0 || first_hi > order - 1 || first_lo > first_hi))
    throw Error(errc::index_out_of_range, "first-entry range [" + std::to_string(first_lo) + ", " +
                                              std::to_string(first_hi) + "] for order " + std::to_string(order));
  cur_.assign(n_, first_hi);
}

// Lexicographic successor among non-increasing candidate vectors: decrement
// the last nonzero entry and level everything after it to the same value.
bool GraphicalSequenceStream::next_candidate() {
  if (!started_) {
    started_ = true;
    return n_ == 0 || cur_[0] >= first_lo_;
  }
  if (n_ == 0) return false;
  int p = n_ - 1;
  while (p >= 0 && cur_[p] == 0) --p;
  if (p < 0) return false;
  const int v = cur_[p] - 1;
  std::fill(cur_.begin() + p, cur_.end(), v);
  return cur_[0] >= first_lo_;
}

bool GraphicalSequenceStream::advance() {
  if (done_) return false;
  while (next_candidate()) {
    if (eg_graphical(cur_)) return true;
  }
  done_ = true;
  return false;
}

TreeSequenceStream::TreeSequenceStream(int order)
    : TreeSequenceStream(order, order - 1, 1) {}

TreeSequenceStream::TreeSequenceStream(int order, int first_hi, int first_lo)
    : n_(order), first_hi_(first_hi), first_lo_(first_lo) {
  if (order < 2) throw Error(errc::order_too_small, "tree sequences need order >= 2");
  if (first_lo < 1 || first_hi > order - 1 || first_lo > first_hi)
    throw Error(errc::index_out_of_range, "first-entry range [" + std::to_string(first_lo) + ", " +
                                              std::to_string(first_hi) + "] for order " + std::to_string(order));
}

// Greedily fills positions pos..n-1 with the largest feasible non-increasing
// tail: every entry stays >= 1 and the remaining total is spendable. Returns
// false when no tail fits.
bool TreeSequenceStream::fill_greedy(int pos, int cap, std::int64_t remaining) {
  for (int q = pos; q < n_; ++q) {
    const int slots_after = n_ - 1 - q;
    const std::int64_t v = std::min<std::int64_t>(cap, remaining - slots_after);
    if (v < 1 || remaining - v > static_cast<std::int64_t>(slots_after) * v) return false;
    cur_[q] = static_cast<int>(v);
    cap = static_cast<int>(v);
    remaining -= v;
  }
  return remaining == 0;
}

bool TreeSequenceStream::advance() {
  if (done_) return false;
  const std::int64_t total = 2 * (static_cast<std::int64_t>(n_) - 1);

  if (!started_) {
    started_ = true;
    cur_.assign(n_, 0);
    if (fill_greedy(0, first_hi_, total) && cur_[0] >= first_lo_) return true;
    done_ = true;
    return false;
  }

  // Decrement the rightmost position that still admits a feasible tail, then
  // refill greedily; that is the immediate lexicographic successor.
  std::vector<std::int64_t> prefix(n_ + 1, 0);
  for (int i = 0; i < n_; ++i) prefix[i + 1] = prefix[i] + cur_[i];

  for (int p = n_ - 1; p >= 0; --p) {
    const int v = cur_[p] - 1;
    if (v < 1) continue;
    const int slots_after = n_ - 1 - p;
    const std::int64_t remaining = total - prefix[p] - v;
    if (remaining > static_cast<std::int64_t>(slots_after) * v) continue;
    cur_[p] = v;
    if (!fill_greedy(p + 1, v, remaining)) continue;
    if (cur_[0] < first_lo_) break;
    return true;
  }
  done_ = true;
  return false;
}

Graph realize_tree(const DegreeSequence& d) {
  const int n = d.order();
  if (n < 2) throw Error(errc::not_tree_sequence, "order " + std::to_string(n) + " below 2");
  const auto& deg = d.values();
  if (deg.back() < 1) throw Error(errc::not_tree_sequence, "entries must be positive");
  if (d.sum() != 2 * (static_cast<std::int64_t>(n) - 1))
    throw Error(errc::not_tree_sequence, "degree sum must be 2(n-1)");

  // Internal vertices (degree >= 2) are a prefix of the sorted sequence; wire
  // them into a path, then hand out the remaining leaf slots left to right.
  int internal = 0;
  while (internal < n && deg[internal] >= 2) ++internal;

  std::vector<std::pair<int, int>> edges;
  if (internal == 0) {
    // n == 2: the single edge.
    edges.emplace_back(0, 1);
    return Graph::from_edge_list(n, edges);
  }

  std::vector<int> slots(internal);
  for (int i = 0; i < internal; ++i) {
    slots[i] = deg[i] - (i > 0 ? 1 : 0) - (i + 1 < internal ? 1 : 0);
    if (i + 1 < internal) edges.emplace_back(i, i + 1);
  }

  int spine = 0;
  for (int leaf = internal; leaf < n; ++leaf) {
    while (spine < internal && slots[spine] == 0) ++spine;
    edges.emplace_back(spine, leaf);
    --slots[spine];
  }
  return Graph::from_edge_list(n, edges);
}

}  // namespace irrlab
