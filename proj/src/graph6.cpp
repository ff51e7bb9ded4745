#include "irrlab/graph6.hpp"

#include <string>
#include <vector>

namespace irrlab {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62)
    throw Error(errc::unsupported_order, "graph6 short form encodes order <= 62, got " + std::to_string(n));

  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int group = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>(63 + (group << (6 - used))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw Error(errc::malformed_graph6, "empty string");

  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 125)
    throw Error(errc::malformed_graph6,
                "header byte " + std::to_string(int(header)) + " outside 63..125 (order over 62 unsupported)");
  const int n = header - 63;

  const long nbits = static_cast<long>(n) * (n - 1) / 2;
  const long nbytes = (nbits + 5) / 6;
  if (static_cast<long>(text.size()) != 1 + nbytes)
    throw Error(errc::malformed_graph6, "expected " + std::to_string(nbytes) + " payload bytes for order " +
                                            std::to_string(n) + ", got " + std::to_string(text.size() - 1));

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  int group = 0, left = 0;
  std::size_t pos = 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (left == 0) {
        const unsigned char b = static_cast<unsigned char>(text[pos++]);
        if (b < 63 || b > 126)
          throw Error(errc::malformed_graph6, "payload byte " + std::to_string(int(b)) + " outside 63..126");
        group = b - 63;
        left = 6;
      }
      if (group & (1 << (left - 1))) edges.emplace_back(i, j);
      --left;
    }
  }
  if (left > 0 && (group & ((1 << left) - 1)) != 0)
    throw Error(errc::malformed_graph6, "nonzero padding bits");
  return Graph::from_edge_list(n, edges);
}

}  // namespace irrlab
