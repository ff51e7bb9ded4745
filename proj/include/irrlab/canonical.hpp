#ifndef IRRLAB_CANONICAL_HPP
#define IRRLAB_CANONICAL_HPP

#include <string>

#include "irrlab/graph.hpp"

namespace irrlab {

// Canonical form for graphs of order <= 8: the lexicographically smallest
// adjacency bit string over all n! relabelings, returned as its graph6
// encoding. Two graphs are isomorphic exactly when their canonical forms are
// equal, and the string parses back to a canonical representative.
std::string canonical_form(const Graph& g);

}  // namespace irrlab

#endif  // IRRLAB_CANONICAL_HPP
