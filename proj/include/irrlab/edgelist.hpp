#ifndef IRRLAB_EDGELIST_HPP
#define IRRLAB_EDGELIST_HPP

#include <string>
#include <string_view>

#include "irrlab/graph.hpp"

namespace irrlab {

// Plain-text edge list: a header line "n m" followed by m lines "u v" with
// 0-based endpoints, newline separated. Parse errors carry the line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

}  // namespace irrlab

#endif  // IRRLAB_EDGELIST_HPP
