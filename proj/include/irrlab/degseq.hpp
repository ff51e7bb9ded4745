#ifndef IRRLAB_DEGSEQ_HPP
#define IRRLAB_DEGSEQ_HPP

#include <vector>

#include "irrlab/degree_sequence.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

// Erdos-Gallai test: the degree sum is even and for every k in 1..n,
//   sum_{i<=k} d_i  <=  k(k-1) + sum_{i>k} min(d_i, k).
bool is_graphical(const DegreeSequence& d);

// Havel-Hakimi realization of a graphical sequence. Deterministic: ties are
// broken by vertex index, and the result's sorted degrees equal the input.
Graph realize(const DegreeSequence& d);

// Enumerates every graphical sequence of the given order in lexicographically
// decreasing order. Streams are restartable (construct a fresh one) and
// partitionable: the (order, first_hi, first_lo) form yields exactly the
// sequences whose first entry lies in [first_lo, first_hi], so disjoint
// first-entry ranges cover the full enumeration and can run concurrently.
class GraphicalSequenceStream {
 public:
  explicit GraphicalSequenceStream(int order);
  GraphicalSequenceStream(int order, int first_hi, int first_lo);

  // Steps to the next sequence; false once the range is exhausted.
  bool advance();
  const std::vector<int>& current() const { return cur_; }
  DegreeSequence current_sequence() const { return DegreeSequence(cur_); }

 private:
  bool next_candidate();

  int n_;
  int first_lo_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> cur_;
};

// Enumerates every degree sequence of a tree on `order` vertices (n positive
// entries summing to 2(order-1)), lexicographically decreasing, with the same
// restart/partition contract as GraphicalSequenceStream.
class TreeSequenceStream {
 public:
  explicit TreeSequenceStream(int order);
  TreeSequenceStream(int order, int first_hi, int first_lo);

  bool advance();
  const std::vector<int>& current() const { return cur_; }
  DegreeSequence current_sequence() const { return DegreeSequence(cur_); }

 private:
  bool fill_greedy(int pos, int cap, std::int64_t remaining);

  int n_;
  int first_hi_;
  int first_lo_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> cur_;
};

// Caterpillar realization of a tree sequence: internal vertices form a path,
// leaves attach to it in index order. Deterministic.
Graph realize_tree(const DegreeSequence& d);

}  // namespace irrlab

#endif  // IRRLAB_DEGSEQ_HPP
