#ifndef IRRLAB_GRAPH6_HPP
#define IRRLAB_GRAPH6_HPP

#include <string>
#include <string_view>

#include "irrlab/graph.hpp"

namespace irrlab {

// graph6 codec, short form only (order 0..62): one header byte (order + 63),
// then the upper triangle of the adjacency matrix in column-major order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed big-endian into 6-bit groups,
// each stored as its value + 63. Trailing pad bits must be zero.
std::string to_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

}  // namespace irrlab

#endif  // IRRLAB_GRAPH6_HPP
