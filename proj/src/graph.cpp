#include "irrlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace irrlab {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw Error(errc::index_out_of_range,
                "vertex " + std::to_string(v) + " in graph of order " + std::to_string(g.order()));
}

}  // namespace

Graph Graph::from_edge_list(int order, const std::vector<std::pair<int, int>>& edges) {
  if (order < 0) throw Error(errc::index_out_of_range, "negative order");
  Graph g;
  g.adj_.resize(order);
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(errc::loop_edge, pair_str(u, v));
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw Error(errc::index_out_of_range,
                  "edge " + pair_str(u, v) + " in graph of order " + std::to_string(order));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < order; ++v) {
    auto& nbrs = g.adj_[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) throw Error(errc::duplicate_edge, pair_str(v, *dup));
  }
  g.m_ = static_cast<int>(edges.size());
  return g;
}

Graph Graph::from_prufer(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size()) + 2;
  for (int c : code)
    if (c < 0 || c >= n)
      throw Error(errc::index_out_of_range,
                  "code entry " + std::to_string(c) + " for order " + std::to_string(n));

  std::vector<int> deg(n, 1);
  for (int c : code) ++deg[c];

  std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--deg[c] == 1) leaves.push(c);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return from_edge_list(n, edges);
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::degree(int v) const {
  check_vertex(*this, v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(*this, v);
  return adj_[v];
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) d[v] = static_cast<int>(adj_[v].size());
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    const auto& nbrs = g.neighbors(u);
    auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    for (int v = u + 1; v < n; ++v) {
      if (it != nbrs.end() && *it == v) {
        ++it;
      } else {
        edges.emplace_back(u, v);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

DegreeSequence degree_sequence(const Graph& g) {
  return DegreeSequence::sorted_from(g.degrees());
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw Error(errc::index_out_of_range, "permutation length " + std::to_string(perm.size()) +
                                              " for order " + std::to_string(n));
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw Error(errc::index_out_of_range, "not a permutation of 0.." + std::to_string(n - 1));
    hit[p] = 1;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edge_list(n, edges);
}

Graph random_tree(int order, std::mt19937_64& rng) {
  if (order < 1) throw Error(errc::order_too_small, "random tree needs order >= 1");
  if (order == 1) return Graph::from_edge_list(1, {});
  if (order == 2) return Graph::from_edge_list(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<int> code(order - 2);
  for (int& c : code) c = pick(rng);
  return Graph::from_prufer(code);
}

}  // namespace irrlab
