#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "irrlab/canonical.hpp"
#include "irrlab/extremal.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/irregularity.hpp"
#include "irrlab/oracle.hpp"

using irrlab::DegreeSequence;
using irrlab::Graph;

TEST_CASE("sequence search on small orders") {
  const auto two = irrlab::bruteforce_max_over_sequences(2);
  CHECK(two.max_value == 0);
  CHECK(two.argmax == std::vector<DegreeSequence>{DegreeSequence({1, 1}), DegreeSequence({0, 0})});

  const auto three = irrlab::bruteforce_max_over_sequences(3);
  CHECK(three.max_value == 2);
  CHECK(three.argmax == std::vector<DegreeSequence>{DegreeSequence({2, 1, 1}), DegreeSequence({1, 1, 0})});

  const auto four = irrlab::bruteforce_max_over_sequences(4);
  CHECK(four.max_value == 6);
  CHECK(four.argmax == std::vector<DegreeSequence>{DegreeSequence({3, 2, 2, 1}), DegreeSequence({3, 1, 1, 1}),
                                                   DegreeSequence({2, 2, 2, 0}), DegreeSequence({2, 1, 1, 0})});
}

TEST_CASE("sequence search matches the closed form") {
  for (int n = 2; n <= 10; ++n) {
    const auto found = irrlab::bruteforce_max_over_sequences(n);
    CHECK(found.max_value == irrlab::max_total_irregularity(n));
    for (const auto& d : found.argmax) CHECK(irrlab::irr_t_of_sequence(d) == found.max_value);
  }
}

TEST_CASE("sequence search partitions merge to the full result") {
  for (int n : {5, 7}) {
    const auto full = irrlab::bruteforce_max_over_sequences(n);
    irrlab::SequenceMaxResult merged;
    for (int hi = n - 1; hi >= 0; hi -= 2) {
      const int lo = std::max(0, hi - 1);
      irrlab::merge_max_result(merged, irrlab::bruteforce_max_over_sequences(n, hi, lo));
    }
    CHECK(merged.max_value == full.max_value);
    CHECK(merged.argmax == full.argmax);
  }
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS(irrlab::bruteforce_max_over_sequences(1), irrlab::Error);
  CHECK_THROWS_AS(irrlab::bruteforce_max_over_sequences(irrlab::kSequenceSearchGuard + 1), irrlab::Error);
  try {
    irrlab::bruteforce_max_over_sequences(irrlab::kSequenceSearchGuard + 1);
  } catch (const irrlab::Error& e) {
    CHECK(e.code() == irrlab::errc::order_guard);
  }
  CHECK_THROWS_AS(irrlab::bruteforce_tree_max(irrlab::kTreeSearchGuard + 1), irrlab::Error);
  // force overrides the guard; tree sequences stay cheap one order past it
  CHECK(irrlab::bruteforce_tree_max(irrlab::kTreeSearchGuard + 1, true).max_value ==
        irrlab::tree_max(irrlab::kTreeSearchGuard + 1));
}

TEST_CASE("tree sequence search") {
  for (int n = 2; n <= 14; ++n) {
    const auto found = irrlab::bruteforce_tree_max(n);
    CHECK(found.max_value == irrlab::tree_max(n));
    if (n >= 3) {
      REQUIRE(found.argmax.size() == 1);  // the star alone attains the maximum
      CHECK(found.argmax[0] == irrlab::degree_sequence(irrlab::star(n)));
    }
  }
  const auto merged_parts = [] {
    irrlab::SequenceMaxResult merged;
    irrlab::merge_max_result(merged, irrlab::bruteforce_tree_max(9, 8, 5));
    irrlab::merge_max_result(merged, irrlab::bruteforce_tree_max(9, 4, 1));
    return merged;
  }();
  const auto full = irrlab::bruteforce_tree_max(9);
  CHECK(merged_parts.max_value == full.max_value);
  CHECK(merged_parts.argmax == full.argmax);
}

TEST_CASE("census mask encoding") {
  CHECK(irrlab::census_mask_count(0) == 1);
  CHECK(irrlab::census_mask_count(4) == 64);
  CHECK(irrlab::census_mask_count(7) == (std::uint64_t{1} << 21));
  CHECK_THROWS_AS(irrlab::census_mask_count(12), irrlab::Error);

  // Mask bits follow graph6 payload order, so decode must agree with parse.
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = irrlab::graph_from_census_mask(4, mask);
    CHECK(irrlab::parse_graph6(irrlab::to_graph6(g)) == g);
  }
  CHECK(irrlab::graph_from_census_mask(3, 0b111) == irrlab::parse_graph6("Bw"));
  CHECK(irrlab::graph_from_census_mask(3, 0b001) == irrlab::parse_graph6("B_"));  // bit 0 is (0,1)
  CHECK(irrlab::graph_from_census_mask(3, 0b100) == irrlab::parse_graph6("BG"));  // bit 2 is (1,2)
}

TEST_CASE("labeled census results") {
  const auto two = irrlab::extremal_census(2);
  CHECK(two.max_value == 0);
  CHECK(two.class_count == 2);
  CHECK(two.labeled_counts == std::vector<std::int64_t>{1, 1});

  const auto four = irrlab::extremal_census(4);
  CHECK(four.n == 4);
  CHECK(four.max_value == 6);
  CHECK(four.class_count == 4);
  CHECK(four.family_subset_confirmed);
  CHECK(four.representatives == std::vector<std::string>{"CB", "CF", "CJ", "CN"});
  CHECK(four.labeled_counts == std::vector<std::int64_t>{12, 4, 4, 12});
  std::int64_t total4 = 0;
  std::multiset<std::vector<int>> class_seqs4;
  for (std::size_t k = 0; k < four.representatives.size(); ++k) {
    total4 += four.labeled_counts[k];
    class_seqs4.insert(irrlab::degree_sequence(irrlab::parse_graph6(four.representatives[k])).values());
  }
  CHECK(total4 == 32);
  CHECK(class_seqs4 == std::multiset<std::vector<int>>{
                           {2, 1, 1, 0}, {2, 2, 2, 0}, {3, 1, 1, 1}, {3, 2, 2, 1}});

  const auto five = irrlab::extremal_census(5);
  CHECK(five.max_value == 14);
  CHECK(five.class_count == 4);
  CHECK(five.family_subset_confirmed);
  CHECK(five.representatives == std::vector<std::string>{"D@[", "D@{", "DB[", "DB{"});
  CHECK(five.labeled_counts == std::vector<std::int64_t>{60, 30, 30, 60});
  CHECK(std::accumulate(five.labeled_counts.begin(), five.labeled_counts.end(), std::int64_t{0}) == 180);

  const auto six = irrlab::extremal_census(6);
  CHECK(six.max_value == 26);
  CHECK(six.class_count == 8);
  CHECK(six.family_subset_confirmed);
  CHECK(six.representatives == std::vector<std::string>{"E?Lw", "E?Nw", "E?\\w", "E?^w", "E@Lw", "E@Nw",
                                                        "E@\\w", "E@^w"});
  CHECK(six.labeled_counts == std::vector<std::int64_t>{360, 180, 60, 120, 120, 60, 180, 360});
  CHECK(std::accumulate(six.labeled_counts.begin(), six.labeled_counts.end(), std::int64_t{0}) == 1440);

  // Attaining classes are closed under complement.
  for (const auto* result : {&four, &five, &six}) {
    std::set<std::string> reps(result->representatives.begin(), result->representatives.end());
    CHECK(reps.size() == result->representatives.size());
    CHECK(std::is_sorted(result->representatives.begin(), result->representatives.end()));
    for (const auto& rep : reps) {
      const auto co = irrlab::canonical_form(irrlab::complement(irrlab::parse_graph6(rep)));
      CHECK(reps.count(co) == 1);
    }
  }
}

TEST_CASE("census partitions merge to the full scan") {
  const int n = 5;
  const std::uint64_t total = irrlab::census_mask_count(n);
  const auto full = irrlab::census_scan(n, 0, total);
  irrlab::CensusScan merged;
  const std::uint64_t step = total / 3;
  irrlab::merge_census_scan(merged, irrlab::census_scan(n, 0, step));
  irrlab::merge_census_scan(merged, irrlab::census_scan(n, step, 2 * step));
  irrlab::merge_census_scan(merged, irrlab::census_scan(n, 2 * step, total));
  CHECK(merged.max_value == full.max_value);
  CHECK(merged.argmax_masks == full.argmax_masks);

  const auto via_classes = irrlab::census_classes(n, merged);
  const auto direct = irrlab::extremal_census(n);
  CHECK(via_classes.representatives == direct.representatives);
  CHECK(via_classes.labeled_counts == direct.labeled_counts);

  CHECK_THROWS_AS(irrlab::extremal_census(irrlab::kCensusGuard + 1), irrlab::Error);
}

TEST_CASE("ratio helpers") {
  CHECK(irrlab::make_ratio(4, 6) == irrlab::Ratio{2, 3});
  CHECK(irrlab::make_ratio(0, 5) == irrlab::Ratio{0, 1});
  CHECK(irrlab::ratio_less({1, 2}, {2, 3}));
  CHECK_FALSE(irrlab::ratio_less({2, 3}, {2, 3}));
  CHECK(irrlab::ratio_less({5, 9}, {1, 1}));

  irrlab::AuditPartial a{3, {}, {1, 2}};
  irrlab::merge_audit_partial(a, {4, {"x"}, {5, 9}});
  CHECK(a.instances == 7);
  CHECK(a.violations == std::vector<std::string>{"x"});
  CHECK(a.max_ratio == irrlab::Ratio{5, 9});
}

TEST_CASE("bound audits") {
  irrlab::AuditOptions options;
  options.connected_max_order = 6;
  options.tree_sequence_max_order = 9;
  options.random_tree_count = 200;
  const auto results = irrlab::audit_bounds(options);
  REQUIRE(results.size() == 2);

  CHECK(results[0].bound_id == "connected_quarter_n_squared");
  CHECK(results[0].instances == 27476);  // connected labeled graphs, orders 1..6
  CHECK(results[0].violations.empty());
  CHECK(results[0].max_ratio == irrlab::Ratio{5, 9});

  CHECK(results[1].bound_id == "tree_n_minus_2");
  CHECK(results[1].violations.empty());
  CHECK(results[1].max_ratio == irrlab::Ratio{1, 1});  // tight on the 3-vertex path

  // Deterministic: a second run reproduces everything.
  const auto again = irrlab::audit_bounds(options);
  for (std::size_t k = 0; k < results.size(); ++k) {
    CHECK(again[k].instances == results[k].instances);
    CHECK(again[k].max_ratio == results[k].max_ratio);
  }

  // Random-tree partitions reproduce index-for-index.
  const auto whole = irrlab::audit_random_trees(0, 100, 10, 40, 99);
  irrlab::AuditPartial parts;
  irrlab::merge_audit_partial(parts, irrlab::audit_random_trees(0, 37, 10, 40, 99));
  irrlab::merge_audit_partial(parts, irrlab::audit_random_trees(37, 100, 10, 40, 99));
  CHECK(parts.instances == whole.instances);
  CHECK(parts.max_ratio == whole.max_ratio);
}
