#ifndef IRRLAB_GRAPH_HPP
#define IRRLAB_GRAPH_HPP

#include <random>
#include <utility>
#include <vector>

#include "irrlab/degree_sequence.hpp"
#include "irrlab/errors.hpp"

namespace irrlab {

// Simple undirected graph on vertices 0..n-1, stored as sorted neighbor
// lists. Instances are immutable once built and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  // Builds a graph with exactly the given edges. Rejects loops, endpoints
  // outside [0, order) and repeated pairs (in either orientation).
  static Graph from_edge_list(int order, const std::vector<std::pair<int, int>>& edges);

  // Labeled tree from a Pruefer code; the result has code.size() + 2 vertices.
  static Graph from_prufer(const std::vector<int>& code);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;

  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

Graph complement(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);

bool is_connected(const Graph& g);  // vacuously true for order <= 1
bool is_tree(const Graph& g);

// New graph in which vertex v of g becomes perm[v]; perm must be a
// permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Uniform random labeled tree (uniform Pruefer code); order >= 1.
Graph random_tree(int order, std::mt19937_64& rng);

}  // namespace irrlab

#endif  // IRRLAB_GRAPH_HPP
