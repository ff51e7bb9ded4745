#include "irrlab/edgelist.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace irrlab {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& detail) {
  throw Error(errc::bad_input, "line " + std::to_string(line_no) + ": " + detail);
}

bool parse_two_ints(const std::string& line, long& a, long& b) {
  std::istringstream iss(line);
  if (!(iss >> a >> b)) return false;
  std::string rest;
  if (iss >> rest) return false;  // trailing tokens
  return true;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t nl = text.find('\n', start);
      if (nl == std::string_view::npos) {
        lines.emplace_back(text.substr(start));
        break;
      }
      lines.emplace_back(text.substr(start, nl - start));
      start = nl + 1;
    }
  }

  std::size_t ln = 0;
  while (ln < lines.size() && blank(lines[ln])) ++ln;
  if (ln == lines.size()) fail(1, "missing header 'n m'");

  long n = 0, m = 0;
  if (!parse_two_ints(lines[ln], n, m)) fail(ln + 1, "expected header 'n m'");
  if (n < 0 || m < 0) fail(ln + 1, "negative count in header");
  ++ln;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++ln) {
    if (ln >= lines.size())
      fail(lines.size(), "expected " + std::to_string(m) + " edge lines, found " + std::to_string(k));
    if (blank(lines[ln])) continue;
    long u = 0, v = 0;
    if (!parse_two_ints(lines[ln], u, v)) fail(ln + 1, "expected edge 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(ln + 1, "endpoint outside [0, " + std::to_string(n - 1) + "]");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++k;
  }
  for (; ln < lines.size(); ++ln)
    if (!blank(lines[ln])) fail(ln + 1, "trailing content after " + std::to_string(m) + " edges");

  try {
    return Graph::from_edge_list(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(errc::bad_input, std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace irrlab
