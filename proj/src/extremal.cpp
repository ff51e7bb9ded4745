#include "irrlab/extremal.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace irrlab {

namespace {

void check_closed_form_order(int order) {
  if (order < 1) throw Error(errc::order_too_small, "order " + std::to_string(order) + " below 1");
  if (order > kMaxExactOrder)
    throw Error(errc::overflow_guard,
                "order " + std::to_string(order) + " exceeds " + std::to_string(kMaxExactOrder));
}

void check_universal_count(int order, int q) {
  if (q < 0 || q > (order - 1) / 2)
    throw Error(errc::invalid_q, std::to_string(q) + " outside [0, " + std::to_string((order - 1) / 2) +
                                     "] for order " + std::to_string(order));
}

std::int64_t narrow(__int128 v, const char* what) {
  if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max())
    throw Error(errc::overflow_guard, what);
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t max_total_irregularity(int order) {
  check_closed_form_order(order);
  const __int128 n = order;
  const __int128 numerator = 2 * n * n * n - 3 * n * n - 2 * n + (order % 2 != 0 ? 3 : 0);
  return narrow(numerator / 12, "maximum total irregularity");
}

std::int64_t extremal_irr_t(int order, int universal_count) {
  check_closed_form_order(order);
  check_universal_count(order, universal_count);
  const __int128 q = universal_count;
  const __int128 value = static_cast<__int128>(max_total_irregularity(order)) - (q * q * q - q) / 3;
  return narrow(value, "extremal value");
}

ContributionTerms contribution_terms(int order, int universal_count) {
  check_closed_form_order(order);
  check_universal_count(order, universal_count);
  const __int128 n = order;
  const __int128 q = universal_count;
  const __int128 s = n - 2 * q;      // low block size + 1: non-universal labels run 1..n-q
  const __int128 c = s / 2;          // ceil((s - 1) / 2), the optional-pair column

  ContributionTerms t;
  t.universal_vs_descending = narrow(q * ((n - 2) * (s - 1) + 2 * c) / 2, "contribution term");
  t.universal_vs_low = narrow(q * (q + 1) * (n - 1 - q), "contribution term");
  t.descending_vs_low = narrow((q + 1) * (s * (s - 1) - 2 * c) / 2, "contribution term");
  t.within_descending = narrow(s * (s - 1) * (s - 2) / 6 - ((s - 1) - c) * c, "contribution term");
  return t;
}

std::vector<std::pair<int, int>> optional_pairs(int order, int universal_count) {
  check_closed_form_order(order);
  check_universal_count(order, universal_count);
  const int threshold = order - 2 * universal_count + 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < threshold - i; ++i) pairs.emplace_back(i, threshold - i);
  return pairs;
}

int ExtremalGraph::universal_vertex(int k) const {
  if (k < 1 || k > spec.universal_count)
    throw Error(errc::index_out_of_range, "universal slot " + std::to_string(k));
  return k - 1;
}

int ExtremalGraph::nonuniversal_vertex(int i) const {
  if (i < 1 || i > spec.order - spec.universal_count)
    throw Error(errc::index_out_of_range, "non-universal label " + std::to_string(i));
  return spec.universal_count - 1 + i;
}

ExtremalGraph construct_extremal(const ExtremalSpec& spec) {
  const int n = spec.order;
  const int q = spec.universal_count;
  if (n < 1) throw Error(errc::invalid_spec, "order " + std::to_string(n) + " below 1");
  if (q < 0 || q > (n - 1) / 2)
    throw Error(errc::invalid_spec, "universal count " + std::to_string(q) + " outside [0, " +
                                        std::to_string((n - 1) / 2) + "] for order " + std::to_string(n));
  const auto pairs = optional_pairs(n, q);
  if (spec.optional_mask.size() > pairs.size())
    throw Error(errc::invalid_spec, "optional mask has " + std::to_string(spec.optional_mask.size()) +
                                        " bits but only " + std::to_string(pairs.size()) + " pairs are free");

  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);

  // Non-universal label i sits at vertex q - 1 + i.
  const int threshold = n - 2 * q + 1;
  for (int i = 1; i <= n - q; ++i)
    for (int j = i + 1; i + j < threshold; ++j) edges.emplace_back(q - 1 + i, q - 1 + j);
  for (std::size_t k = 0; k < spec.optional_mask.size(); ++k)
    if (spec.optional_mask[k])
      edges.emplace_back(q - 1 + pairs[k].first, q - 1 + pairs[k].second);

  ExtremalGraph result;
  result.spec = spec;
  result.spec.optional_mask.resize(pairs.size(), false);
  result.graph = Graph::from_edge_list(n, edges);
  return result;
}

void for_each_extremal_family_member(int order, const std::function<void(const ExtremalGraph&)>& fn) {
  if (order < 4) throw Error(errc::order_too_small, "family needs order >= 4, got " + std::to_string(order));
  const std::size_t bits = optional_pairs(order, 1).size();
  ExtremalSpec spec;
  spec.order = order;
  spec.universal_count = 1;
  spec.optional_mask.assign(bits, false);
  for (std::uint64_t mask = 0;; ++mask) {
    for (std::size_t k = 0; k < bits; ++k) spec.optional_mask[k] = (mask >> k) & 1;
    fn(construct_extremal(spec));
    if (mask + 1 == (std::uint64_t{1} << bits)) break;
  }
}

std::vector<ExtremalGraph> extremal_family(int order) {
  std::vector<ExtremalGraph> family;
  for_each_extremal_family_member(order, [&](const ExtremalGraph& g) { family.push_back(g); });
  return family;
}

std::vector<bool> mask_from_hex(const std::string& hex, std::size_t bit_count) {
  std::string digits = hex;
  if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
  if (digits.empty()) throw Error(errc::invalid_spec, "empty mask");

  std::vector<bool> mask(bit_count, false);
  for (std::size_t pos = 0; pos < digits.size(); ++pos) {
    const char c = digits[digits.size() - 1 - pos];
    int value;
    if (c >= '0' && c <= '9') value = c - '0';
    else if (c >= 'a' && c <= 'f') value = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') value = c - 'A' + 10;
    else throw Error(errc::invalid_spec, std::string("mask digit '") + c + "' is not hexadecimal");
    for (int b = 0; b < 4; ++b) {
      if (!(value & (1 << b))) continue;
      const std::size_t bit = 4 * pos + b;
      if (bit >= bit_count)
        throw Error(errc::invalid_spec, "mask bit " + std::to_string(bit) + " set but only " +
                                            std::to_string(bit_count) + " pairs are free");
      mask[bit] = true;
    }
  }
  return mask;
}

std::string mask_to_hex(const std::vector<bool>& mask) {
  const std::size_t digits = mask.empty() ? 1 : (mask.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t bit = 0; bit < mask.size(); ++bit) {
    if (!mask[bit]) continue;
    const std::size_t digit = bit / 4;
    int value = out[digits - 1 - digit] <= '9' ? out[digits - 1 - digit] - '0'
                                               : out[digits - 1 - digit] - 'a' + 10;
    value |= 1 << (bit % 4);
    out[digits - 1 - digit] = value < 10 ? static_cast<char>('0' + value) : static_cast<char>('a' + value - 10);
  }
  return "0x" + out;
}

Graph star(int order) {
  if (order < 1) throw Error(errc::order_too_small, "star needs order >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < order; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(order, edges);
}

std::int64_t tree_max(int order) {
  check_closed_form_order(order);
  return narrow(static_cast<__int128>(order - 1) * (order - 2), "tree maximum");
}

namespace {

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n <= 2) return true;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

}  // namespace

Graph pendant_shift(const Graph& tree) {
  if (!is_tree(tree)) throw Error(errc::not_a_tree, "pendant shift is defined on trees");
  if (is_star(tree)) throw Error(errc::already_star, "no pendant left to move");

  const int n = tree.order();
  const std::vector<int> deg = tree.degrees();
  const int max_deg = *std::max_element(deg.begin(), deg.end());

  int u = 0;
  while (deg[u] != max_deg) ++u;
  int v = -1;
  for (int x = 0; x < n; ++x) {
    if (deg[x] == 1 && x != u && !tree.has_edge(u, x)) {
      v = x;
      break;
    }
  }
  // A non-star tree always has a pendant beyond u's neighborhood.
  const int w = tree.neighbors(v).front();

  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (const auto& e : tree.edges())
    if (!(e.first == std::min(v, w) && e.second == std::max(v, w))) edges.push_back(e);
  edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

std::vector<Graph> star_ascent(const Graph& tree) {
  if (!is_tree(tree)) throw Error(errc::not_a_tree, "ascent is defined on trees");
  std::vector<Graph> chain{tree};
  while (!is_star(chain.back())) chain.push_back(pendant_shift(chain.back()));
  return chain;
}

}  // namespace irrlab
