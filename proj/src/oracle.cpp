#include "irrlab/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "irrlab/canonical.hpp"
#include "irrlab/degseq.hpp"
#include "irrlab/extremal.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/irregularity.hpp"

namespace irrlab {

namespace {

void check_guard(int order, int lo, int guard, bool force, const char* what) {
  if (order < lo)
    throw Error(errc::order_too_small, std::string(what) + " needs order >= " + std::to_string(lo));
  if (!force && order > guard)
    throw Error(errc::order_guard, std::string(what) + " is guarded to order <= " + std::to_string(guard) +
                                       " (force to override), got " + std::to_string(order));
}

template <class Stream>
SequenceMaxResult scan_stream(Stream stream) {
  SequenceMaxResult result;
  while (stream.advance()) {
    const std::int64_t value = irr_t_of_sequence(stream.current());
    if (value > result.max_value) {
      result.max_value = value;
      result.argmax.clear();
    }
    if (value == result.max_value) result.argmax.push_back(stream.current_sequence());
  }
  return result;
}

}  // namespace

SequenceMaxResult bruteforce_max_over_sequences(int order, bool force) {
  check_guard(order, 2, kSequenceSearchGuard, force, "sequence search");
  return scan_stream(GraphicalSequenceStream(order));
}

SequenceMaxResult bruteforce_max_over_sequences(int order, int first_hi, int first_lo, bool force) {
  check_guard(order, 2, kSequenceSearchGuard, force, "sequence search");
  return scan_stream(GraphicalSequenceStream(order, first_hi, first_lo));
}

SequenceMaxResult bruteforce_tree_max(int order, bool force) {
  check_guard(order, 2, kTreeSearchGuard, force, "tree sequence search");
  return scan_stream(TreeSequenceStream(order));
}

SequenceMaxResult bruteforce_tree_max(int order, int first_hi, int first_lo, bool force) {
  check_guard(order, 2, kTreeSearchGuard, force, "tree sequence search");
  return scan_stream(TreeSequenceStream(order, first_hi, first_lo));
}

void merge_max_result(SequenceMaxResult& into, SequenceMaxResult part) {
  if (part.max_value > into.max_value) {
    into = std::move(part);
  } else if (part.max_value == into.max_value) {
    for (auto& seq : part.argmax) into.argmax.push_back(std::move(seq));
  }
}

std::uint64_t census_mask_count(int order) {
  if (order < 0 || order > 11)
    throw Error(errc::order_too_large, "census masks hold at most C(11,2) bits");
  return std::uint64_t{1} << (order * (order - 1) / 2);
}

Graph graph_from_census_mask(int order, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(i, j);
  return Graph::from_edge_list(order, edges);
}

CensusScan census_scan(int order, std::uint64_t mask_begin, std::uint64_t mask_end, bool force) {
  check_guard(order, 2, kCensusGuard, force, "labeled census");
  if (order > 11)
    throw Error(errc::order_too_large, "census masks hold at most C(11,2) bits");
  const std::uint64_t total = census_mask_count(order);
  if (mask_begin > mask_end || mask_end > total)
    throw Error(errc::index_out_of_range, "mask range beyond 2^C(n,2)");

  const int nbits = order * (order - 1) / 2;
  // Endpoints of payload bit b, flattened.
  std::vector<int> ei(nbits), ej(nbits);
  {
    int bit = 0;
    for (int j = 1; j < order; ++j)
      for (int i = 0; i < j; ++i, ++bit) {
        ei[bit] = i;
        ej[bit] = j;
      }
  }

  CensusScan result;
  std::vector<int> deg(order);
  for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const int bit = std::countr_zero(m);
      ++deg[ei[bit]];
      ++deg[ej[bit]];
    }
    std::int64_t value = 0;
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v) value += std::abs(deg[u] - deg[v]);
    if (value > result.max_value) {
      result.max_value = value;
      result.argmax_masks.clear();
    }
    if (value == result.max_value) result.argmax_masks.push_back(mask);
  }
  return result;
}

void merge_census_scan(CensusScan& into, CensusScan part) {
  if (part.max_value > into.max_value) {
    into = std::move(part);
  } else if (part.max_value == into.max_value) {
    into.argmax_masks.insert(into.argmax_masks.end(), part.argmax_masks.begin(), part.argmax_masks.end());
  }
}

CensusResult census_classes(int order, const CensusScan& scan) {
  std::map<std::string, std::int64_t> classes;
  for (std::uint64_t mask : scan.argmax_masks)
    ++classes[canonical_form(graph_from_census_mask(order, mask))];

  CensusResult result;
  result.n = order;
  result.max_value = scan.max_value;
  result.class_count = static_cast<int>(classes.size());
  for (const auto& [rep, count] : classes) {
    result.representatives.push_back(rep);
    result.labeled_counts.push_back(count);
  }

  result.family_subset_confirmed = true;
  if (order >= 4) {
    for_each_extremal_family_member(order, [&](const ExtremalGraph& member) {
      if (!classes.count(canonical_form(member.graph))) result.family_subset_confirmed = false;
    });
  }
  return result;
}

CensusResult extremal_census(int order, bool force) {
  return census_classes(order, census_scan(order, 0, census_mask_count(order), force));
}

Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error(errc::bad_input, "ratio denominator must be positive");
  if (num < 0) throw Error(errc::bad_input, "ratio numerator must be non-negative");
  const std::int64_t g = std::gcd(num, den);
  return Ratio{num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

bool ratio_less(const Ratio& a, const Ratio& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

void merge_audit_partial(AuditPartial& into, AuditPartial part) {
  into.instances += part.instances;
  into.violations.insert(into.violations.end(), part.violations.begin(), part.violations.end());
  if (ratio_less(into.max_ratio, part.max_ratio)) into.max_ratio = part.max_ratio;
}

namespace {

// Tracks one audited graph against the bound irr_t <= (num/den) * irr,
// compared exactly as irr_t * den <= num * irr. The graph itself is only
// materialized (for its graph6 form) when a violation is found.
template <class GraphFn>
void audit_one(AuditPartial& out, GraphFn&& graph_fn, std::int64_t irr_value, std::int64_t irr_t_value,
               std::int64_t factor_num, std::int64_t factor_den) {
  ++out.instances;
  if (irr_t_value * factor_den > factor_num * irr_value) out.violations.push_back(to_graph6(graph_fn()));
  if (irr_value > 0) {
    const Ratio r = make_ratio(irr_t_value * factor_den, factor_num * irr_value);
    if (ratio_less(out.max_ratio, r)) out.max_ratio = r;
  }
}

}  // namespace

AuditPartial audit_connected_scan(int order, std::uint64_t mask_begin, std::uint64_t mask_end, bool force) {
  check_guard(order, 1, kConnectedAuditGuard, force, "connected audit");
  const std::uint64_t total = census_mask_count(order);
  if (mask_begin > mask_end || mask_end > total)
    throw Error(errc::index_out_of_range, "mask range beyond 2^C(n,2)");

  const int nbits = order * (order - 1) / 2;
  std::vector<int> ei(nbits), ej(nbits);
  {
    int bit = 0;
    for (int j = 1; j < order; ++j)
      for (int i = 0; i < j; ++i, ++bit) {
        ei[bit] = i;
        ej[bit] = j;
      }
  }

  AuditPartial out;
  std::vector<int> deg(order), parent(order);
  const std::int64_t factor_num = static_cast<std::int64_t>(order) * order;
  for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int components = order;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const int bit = std::countr_zero(m);
      const int i = ei[bit], j = ej[bit];
      ++deg[i];
      ++deg[j];
      const int ri = find(i), rj = find(j);
      if (ri != rj) {
        parent[ri] = rj;
        --components;
      }
    }
    if (components != 1) continue;

    std::int64_t irr_value = 0, irr_t_value = 0;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const int bit = std::countr_zero(m);
      irr_value += std::abs(deg[ei[bit]] - deg[ej[bit]]);
    }
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v) irr_t_value += std::abs(deg[u] - deg[v]);

    audit_one(
        out, [&] { return graph_from_census_mask(order, mask); }, irr_value, irr_t_value, factor_num, 4);
  }
  return out;
}

AuditPartial audit_tree_sequences(int order) {
  AuditPartial out;
  TreeSequenceStream stream(order);
  while (stream.advance()) {
    const Graph t = realize_tree(stream.current_sequence());
    audit_one(
        out, [&] { return t; }, irr(t), irr_t(t), order - 2, 1);
  }
  return out;
}

AuditPartial audit_random_trees(int index_begin, int index_end, int order_min, int order_max,
                                std::uint64_t seed) {
  if (order_min < 2 || order_min > order_max)
    throw Error(errc::index_out_of_range, "random tree order range");
  AuditPartial out;
  for (int i = index_begin; i < index_end; ++i) {
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(i));
    const int n = std::uniform_int_distribution<int>(order_min, order_max)(rng);
    const Graph t = random_tree(n, rng);
    audit_one(
        out, [&] { return t; }, irr(t), irr_t(t), n - 2, 1);
  }
  return out;
}

std::vector<AuditResult> audit_bounds(const AuditOptions& options) {
  AuditPartial connected;
  for (int n = 1; n <= options.connected_max_order; ++n)
    merge_audit_partial(connected, audit_connected_scan(n, 0, census_mask_count(n), options.force));

  AuditPartial trees;
  for (int n = 2; n <= options.tree_sequence_max_order; ++n)
    merge_audit_partial(trees, audit_tree_sequences(n));
  merge_audit_partial(trees, audit_random_trees(0, options.random_tree_count, options.random_tree_min_order,
                                                options.random_tree_max_order, options.seed));

  std::vector<AuditResult> results(2);
  results[0].bound_id = "connected_quarter_n_squared";
  results[0].instances = connected.instances;
  results[0].violations = std::move(connected.violations);
  results[0].max_ratio = connected.max_ratio;
  results[1].bound_id = "tree_n_minus_2";
  results[1].instances = trees.instances;
  results[1].violations = std::move(trees.violations);
  results[1].max_ratio = trees.max_ratio;
  return results;
}

}  // namespace irrlab
