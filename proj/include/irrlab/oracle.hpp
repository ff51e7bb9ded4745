#ifndef IRRLAB_ORACLE_HPP
#define IRRLAB_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irrlab/degree_sequence.hpp"
#include "irrlab/graph.hpp"

namespace irrlab {

// Enumeration guards. Each is overridable with force=true; the cost of an
// override grows quickly (sequence search is exponential in order, labeled
// scans are 2^C(n,2)).
inline constexpr int kSequenceSearchGuard = 14;
inline constexpr int kTreeSearchGuard = 40;
inline constexpr int kCensusGuard = 7;
inline constexpr int kConnectedAuditGuard = 7;

struct SequenceMaxResult {
  std::int64_t max_value = -1;
  std::vector<DegreeSequence> argmax;  // in enumeration order (lexicographically decreasing)
};

// Exhaustive maximum of irr_t over all graphical sequences of the given
// order. Searching sequences instead of labeled graphs is sound because
// irr_t is determined by the degree sequence, every graphical sequence has a
// realization, and the maximum is taken over all simple graphs, connected or
// not. The (first_hi, first_lo) form searches only sequences whose first
// entry lies in that range; disjoint ranges merge into the full result.
SequenceMaxResult bruteforce_max_over_sequences(int order, bool force = false);
SequenceMaxResult bruteforce_max_over_sequences(int order, int first_hi, int first_lo, bool force = false);

// Same search restricted to degree sequences of trees.
SequenceMaxResult bruteforce_tree_max(int order, bool force = false);
SequenceMaxResult bruteforce_tree_max(int order, int first_hi, int first_lo, bool force = false);

// Folds `part` into `into`: keeps the larger maximum, concatenates argmax
// lists on ties. Feeding partitions in enumeration order (descending first
// entry, ascending mask range) reproduces the single-scan result exactly.
void merge_max_result(SequenceMaxResult& into, SequenceMaxResult part);

// Labeled-graph census. Graphs of order n are encoded as upper-triangle edge
// bitmasks (graph6 payload order), scanned exhaustively.
std::uint64_t census_mask_count(int order);  // 2^C(n,2)
Graph graph_from_census_mask(int order, std::uint64_t mask);

struct CensusScan {
  std::int64_t max_value = -1;
  std::vector<std::uint64_t> argmax_masks;
};

CensusScan census_scan(int order, std::uint64_t mask_begin, std::uint64_t mask_end, bool force = false);
void merge_census_scan(CensusScan& into, CensusScan part);

struct CensusResult {
  int n = 0;
  std::int64_t max_value = -1;
  int class_count = 0;
  std::vector<std::string> representatives;   // canonical graph6, ascending
  std::vector<std::int64_t> labeled_counts;   // aligned with representatives
  bool family_subset_confirmed = false;       // every family member's class appears (vacuous below order 4)
};

// Groups a scan's attaining graphs into isomorphism classes and checks the
// constructed family against them.
CensusResult census_classes(int order, const CensusScan& scan);
CensusResult extremal_census(int order, bool force = false);

// Exact non-negative rational, reduced, denominator positive. num == 0 is
// the conventional value when a bound's right side vanishes (regular graph).
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio make_ratio(std::int64_t num, std::int64_t den);
bool ratio_less(const Ratio& a, const Ratio& b);

struct AuditResult {
  std::string bound_id;
  std::int64_t instances = 0;
  std::vector<std::string> violations;  // graph6 of every counterexample found (expected none)
  Ratio max_ratio;                      // largest observed irr_t / bound
};

// Partition pieces, mergeable in any grouping.
struct AuditPartial {
  std::int64_t instances = 0;
  std::vector<std::string> violations;
  Ratio max_ratio;
};

void merge_audit_partial(AuditPartial& into, AuditPartial part);

// irr_t <= n^2/4 * irr over connected labeled graphs of one order.
AuditPartial audit_connected_scan(int order, std::uint64_t mask_begin, std::uint64_t mask_end,
                                  bool force = false);
// irr_t <= (n-2) * irr over caterpillar realizations of every tree sequence.
AuditPartial audit_tree_sequences(int order);
// The tree bound again over random trees; tree index i uses seed ^ i, so any
// index split reproduces the same instances.
AuditPartial audit_random_trees(int index_begin, int index_end, int order_min, int order_max,
                                std::uint64_t seed);

struct AuditOptions {
  int connected_max_order = kConnectedAuditGuard;
  int tree_sequence_max_order = 9;
  int random_tree_count = 1000;
  int random_tree_min_order = 10;
  int random_tree_max_order = 100;
  std::uint64_t seed = 424242;
  bool force = false;
};

// Runs both audits and returns one AuditResult per bound, ids
// "connected_quarter_n_squared" and "tree_n_minus_2", in that order.
std::vector<AuditResult> audit_bounds(const AuditOptions& options = {});

}  // namespace irrlab

#endif  // IRRLAB_ORACLE_HPP
