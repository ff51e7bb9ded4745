// irrlab: command-line front end over the irregularity library.
//
// Subcommands: compute, extremal {value|construct|enumerate},
// oracle {theorem|trees|census|audit}, tree ascent. Reports go to stdout as
// JSON (default) or TSV; both carry the same values. Exit codes: 0 success /
// verified, 1 an oracle found a mismatch, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "irrlab/degseq.hpp"
#include "irrlab/edgelist.hpp"
#include "irrlab/extremal.hpp"
#include "irrlab/graph6.hpp"
#include "irrlab/irregularity.hpp"
#include "irrlab/json_io.hpp"
#include "irrlab/oracle.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw irrlab::Error(irrlab::errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// graph6 input holds one graph per line; the edge-list format holds one
// graph per file.
std::vector<irrlab::Graph> load_graphs(const std::string& path, const std::string& format) {
  const std::string text = slurp(path);
  std::vector<irrlab::Graph> graphs;
  if (format == "edges") {
    graphs.push_back(irrlab::parse_edge_list(text));
    return graphs;
  }
  std::size_t start = 0, line_no = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    std::string line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    ++line_no;
    if (!line.empty()) {
      try {
        graphs.push_back(irrlab::parse_graph6(line));
      } catch (const irrlab::Error& e) {
        throw irrlab::Error(irrlab::errc::bad_input, "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    start = nl + 1;
  }
  if (graphs.empty())
    throw irrlab::Error(irrlab::errc::bad_input, "no graphs in '" + path + "'");
  return graphs;
}

std::string join_ints(const std::vector<int>& values) {
  if (values.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

// One report shape for every subcommand; TSV mirrors the JSON values with
// parameters and the verdict carried on comment lines.
struct Report {
  std::string command;
  json parameters = json::object();
  json results;
  bool is_oracle = false;
  bool verified = true;
  std::vector<std::string> tsv_header;
  std::vector<std::vector<std::string>> tsv_rows;
};

int emit_report(const Report& report, const std::string& emit, Clock::time_point t0) {
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  if (emit == "json") {
    json j{{"command", report.command},
           {"parameters", report.parameters},
           {"results", report.results},
           {"elapsed_ms", elapsed}};
    if (report.is_oracle) j["verified"] = report.verified;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "# command: " << report.command << "\n";
    for (const auto& [key, value] : report.parameters.items())
      std::cout << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
                << "\n";
    std::string header;
    for (std::size_t i = 0; i < report.tsv_header.size(); ++i)
      header += (i ? "\t" : "") + report.tsv_header[i];
    std::cout << header << "\n";
    for (const auto& row : report.tsv_rows) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) line += (i ? "\t" : "") + row[i];
      std::cout << line << "\n";
    }
    if (report.is_oracle) std::cout << "# verified: " << (report.verified ? "true" : "false") << "\n";
    std::cout << "# elapsed_ms: " << elapsed << "\n";
  }
  return report.is_oracle && !report.verified ? 1 : 0;
}

// Runs jobs 0..job_count-1 on up to `threads` workers; the first exception
// wins and is rethrown on the caller's thread.
void run_parallel(int threads, int job_count, const std::function<void(int)>& job) {
  if (threads <= 1 || job_count <= 1) {
    for (int j = 0; j < job_count; ++j) job(j);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int j = next.fetch_add(1); j < job_count; j = next.fetch_add(1)) {
      try {
        job(j);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int workers = std::min(threads, job_count);
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Splits the first-entry values hi..lo (descending) into `parts` contiguous
// chunks, returned in enumeration order.
std::vector<std::pair<int, int>> split_first_entry(int hi, int lo, int parts) {
  const int count = hi - lo + 1;
  parts = std::max(1, std::min(parts, count));
  std::vector<std::pair<int, int>> chunks;
  int cur = hi;
  for (int k = 0; k < parts; ++k) {
    const int size = count / parts + (k < count % parts ? 1 : 0);
    chunks.emplace_back(cur, cur - size + 1);
    cur -= size;
  }
  return chunks;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_mask_range(std::uint64_t total, int parts) {
  parts = std::max(1, static_cast<int>(std::min<std::uint64_t>(parts, total ? total : 1)));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
  std::uint64_t cur = 0;
  for (int k = 0; k < parts; ++k) {
    const std::uint64_t size = total / parts + (static_cast<std::uint64_t>(k) < total % parts ? 1 : 0);
    chunks.emplace_back(cur, cur + size);
    cur += size;
  }
  return chunks;
}

irrlab::SequenceMaxResult parallel_sequence_search(int order, int threads, bool force, bool trees) {
  const int hi = order - 1;
  const int lo = trees ? 1 : 0;
  const auto chunks = split_first_entry(hi, lo, threads);
  std::vector<irrlab::SequenceMaxResult> parts(chunks.size());
  run_parallel(threads, static_cast<int>(chunks.size()), [&](int k) {
    parts[k] = trees ? irrlab::bruteforce_tree_max(order, chunks[k].first, chunks[k].second, force)
                     : irrlab::bruteforce_max_over_sequences(order, chunks[k].first, chunks[k].second, force);
  });
  irrlab::SequenceMaxResult merged;
  for (auto& part : parts) irrlab::merge_max_result(merged, std::move(part));
  return merged;
}

// ---- subcommand drivers ---------------------------------------------------

struct CommonArgs {
  std::string input;
  std::string format = "graph6";
  std::string emit = "json";
  int n = 0;
  int n_min = 2;
  int n_max = 0;
  int q = 1;
  std::string mask = "0x0";
  int threads = 1;
  bool force = false;
};

void warn_if_forced(const CommonArgs& args) {
  if (args.force) std::cerr << "warning: enumeration guards overridden; large orders can run for a long time\n";
}

int run_compute(const CommonArgs& args) {
  const auto t0 = Clock::now();
  const auto graphs = load_graphs(args.input, args.format);

  Report report;
  report.command = "compute";
  report.parameters = {{"input", args.input}, {"format", args.format}, {"emit", args.emit}};
  report.results = json::array();
  report.tsv_header = {"index", "n", "m", "irr", "irr_t", "degree_sequence"};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto r = irrlab::analyze(graphs[i]);
    report.results.push_back(r);
    report.tsv_rows.push_back({std::to_string(i), std::to_string(r.n), std::to_string(r.m),
                               std::to_string(r.irr), std::to_string(r.irr_t),
                               join_ints(r.degree_sequence.values())});
  }
  return emit_report(report, args.emit, t0);
}

int run_extremal_value(const CommonArgs& args) {
  const auto t0 = Clock::now();
  const std::int64_t value = irrlab::max_total_irregularity(args.n);

  Report report;
  report.command = "extremal value";
  report.parameters = {{"n", args.n}, {"emit", args.emit}};
  report.results = {{"n", args.n}, {"max_irr_t", value}};
  report.tsv_header = {"n", "max_irr_t"};
  report.tsv_rows = {{std::to_string(args.n), std::to_string(value)}};
  return emit_report(report, args.emit, t0);
}

json member_json(const irrlab::ExtremalGraph& member) {
  json j{{"mask", irrlab::mask_to_hex(member.spec.optional_mask)},
         {"degree_sequence", irrlab::degree_sequence(member.graph)},
         {"irr_t", irrlab::irr_t(member.graph)},
         {"m", member.graph.size()}};
  if (member.spec.order <= 62) j["graph6"] = irrlab::to_graph6(member.graph);
  return j;
}

int run_extremal_construct(const CommonArgs& args) {
  const auto t0 = Clock::now();
  irrlab::ExtremalSpec spec;
  spec.order = args.n;
  spec.universal_count = args.q;
  spec.optional_mask = irrlab::mask_from_hex(args.mask, irrlab::optional_pairs(args.n, args.q).size());
  const auto member = irrlab::construct_extremal(spec);

  json pairs = json::array();
  for (const auto& [i, j] : irrlab::optional_pairs(args.n, args.q)) pairs.push_back({i, j});

  Report report;
  report.command = "extremal construct";
  report.parameters = {{"n", args.n}, {"q", args.q}, {"mask", args.mask}, {"emit", args.emit}};
  report.results = member_json(member);
  report.results["n"] = args.n;
  report.results["q"] = args.q;
  report.results["optional_pairs"] = pairs;

  const auto& r = report.results;
  report.tsv_header = {"n", "q", "mask", "m", "irr_t", "graph6", "degree_sequence"};
  report.tsv_rows = {{std::to_string(args.n), std::to_string(args.q), r["mask"].get<std::string>(),
                      std::to_string(member.graph.size()), std::to_string(r["irr_t"].get<std::int64_t>()),
                      r.contains("graph6") ? r["graph6"].get<std::string>() : "-",
                      join_ints(irrlab::degree_sequence(member.graph).values())}};
  return emit_report(report, args.emit, t0);
}

int run_extremal_enumerate(const CommonArgs& args) {
  const auto t0 = Clock::now();
  warn_if_forced(args);
  // 2^(floor(n/2)-1) members; keep accidental huge enumerations behind the
  // same override as the oracle guards.
  if (args.n > 32 && !args.force)
    throw irrlab::Error(irrlab::errc::order_guard,
                        "enumerate is guarded to order <= 32 (force to override), got " + std::to_string(args.n));

  Report report;
  report.command = "extremal enumerate";
  report.parameters = {{"n", args.n}, {"emit", args.emit}};
  report.tsv_header = {"mask", "m", "irr_t", "graph6", "degree_sequence"};

  json members = json::array();
  irrlab::for_each_extremal_family_member(args.n, [&](const irrlab::ExtremalGraph& member) {
    json j = member_json(member);
    report.tsv_rows.push_back({j["mask"].get<std::string>(), std::to_string(member.graph.size()),
                               std::to_string(j["irr_t"].get<std::int64_t>()),
                               j.contains("graph6") ? j["graph6"].get<std::string>() : "-",
                               join_ints(irrlab::degree_sequence(member.graph).values())});
    members.push_back(std::move(j));
  });
  report.results = {{"n", args.n}, {"count", members.size()}, {"members", std::move(members)}};
  return emit_report(report, args.emit, t0);
}

int run_oracle_theorem(const CommonArgs& args) {
  const auto t0 = Clock::now();
  warn_if_forced(args);
  Report report;
  report.command = "oracle theorem";
  report.is_oracle = true;
  report.parameters = {
      {"n_min", args.n_min}, {"n_max", args.n_max}, {"threads", args.threads}, {"force", args.force}, {"emit", args.emit}};
  report.results = json::array();
  report.tsv_header = {"n", "closed_form", "search_max", "argmax_count", "match"};

  for (int n = args.n_min; n <= args.n_max; ++n) {
    const std::int64_t expected = irrlab::max_total_irregularity(n);
    const auto found = parallel_sequence_search(n, args.threads, args.force, /*trees=*/false);
    const bool match = found.max_value == expected;
    json row{{"n", n},
             {"closed_form", expected},
             {"search_max", found.max_value},
             {"argmax_count", found.argmax.size()},
             {"match", match}};
    if (!match) row["argmax"] = found.argmax;
    report.results.push_back(std::move(row));
    report.tsv_rows.push_back({std::to_string(n), std::to_string(expected), std::to_string(found.max_value),
                               std::to_string(found.argmax.size()), match ? "true" : "false"});
    report.verified = report.verified && match;
  }
  return emit_report(report, args.emit, t0);
}

int run_oracle_trees(const CommonArgs& args) {
  const auto t0 = Clock::now();
  warn_if_forced(args);
  Report report;
  report.command = "oracle trees";
  report.is_oracle = true;
  report.parameters = {
      {"n_min", args.n_min}, {"n_max", args.n_max}, {"threads", args.threads}, {"force", args.force}, {"emit", args.emit}};
  report.results = json::array();
  report.tsv_header = {"n", "expected", "search_max", "argmax_is_star", "match"};

  for (int n = args.n_min; n <= args.n_max; ++n) {
    const std::int64_t expected = irrlab::tree_max(n);
    const auto found = parallel_sequence_search(n, args.threads, args.force, /*trees=*/true);
    std::vector<int> star_seq(n, 1);
    star_seq[0] = n - 1;
    const bool star_only =
        found.argmax.size() == 1 && found.argmax.front() == irrlab::DegreeSequence(star_seq);
    const bool match = found.max_value == expected && star_only;
    json row{{"n", n},
             {"expected", expected},
             {"search_max", found.max_value},
             {"argmax_is_star", star_only},
             {"match", match}};
    if (!match) row["argmax"] = found.argmax;
    report.results.push_back(std::move(row));
    report.tsv_rows.push_back({std::to_string(n), std::to_string(expected), std::to_string(found.max_value),
                               star_only ? "true" : "false", match ? "true" : "false"});
    report.verified = report.verified && match;
  }
  return emit_report(report, args.emit, t0);
}

int run_oracle_census(const CommonArgs& args) {
  const auto t0 = Clock::now();
  warn_if_forced(args);
  const std::uint64_t total = [&] {
    // Surface the guard before touching the mask space.
    irrlab::census_scan(args.n, 0, 0, args.force);
    return irrlab::census_mask_count(args.n);
  }();

  const auto chunks = split_mask_range(total, args.threads);
  std::vector<irrlab::CensusScan> parts(chunks.size());
  run_parallel(args.threads, static_cast<int>(chunks.size()), [&](int k) {
    parts[k] = irrlab::census_scan(args.n, chunks[k].first, chunks[k].second, args.force);
  });
  irrlab::CensusScan scan;
  for (auto& part : parts) irrlab::merge_census_scan(scan, std::move(part));
  const auto census = irrlab::census_classes(args.n, scan);

  Report report;
  report.command = "oracle census";
  report.is_oracle = true;
  report.parameters = {{"n", args.n}, {"threads", args.threads}, {"force", args.force}, {"emit", args.emit}};
  report.results = census;
  report.verified =
      census.max_value == irrlab::max_total_irregularity(args.n) && census.family_subset_confirmed;
  report.tsv_header = {"representative", "labeled_count"};
  for (std::size_t i = 0; i < census.representatives.size(); ++i)
    report.tsv_rows.push_back({census.representatives[i], std::to_string(census.labeled_counts[i])});
  return emit_report(report, args.emit, t0);
}

int run_oracle_audit(const CommonArgs& args) {
  const auto t0 = Clock::now();
  warn_if_forced(args);
  irrlab::AuditOptions options;
  options.connected_max_order = args.n_max;
  options.force = args.force;

  irrlab::AuditPartial connected;
  for (int n = 1; n <= options.connected_max_order; ++n) {
    // Guard check happens on the first chunk; chunks then scan in parallel.
    const auto chunks = split_mask_range(irrlab::census_mask_count(n), args.threads);
    std::vector<irrlab::AuditPartial> parts(chunks.size());
    run_parallel(args.threads, static_cast<int>(chunks.size()), [&](int k) {
      parts[k] = irrlab::audit_connected_scan(n, chunks[k].first, chunks[k].second, options.force);
    });
    for (auto& part : parts) irrlab::merge_audit_partial(connected, std::move(part));
  }

  irrlab::AuditPartial trees;
  for (int n = 2; n <= options.tree_sequence_max_order; ++n)
    irrlab::merge_audit_partial(trees, irrlab::audit_tree_sequences(n));
  {
    const auto chunks = split_mask_range(options.random_tree_count, args.threads);
    std::vector<irrlab::AuditPartial> parts(chunks.size());
    run_parallel(args.threads, static_cast<int>(chunks.size()), [&](int k) {
      parts[k] = irrlab::audit_random_trees(static_cast<int>(chunks[k].first),
                                            static_cast<int>(chunks[k].second),
                                            options.random_tree_min_order, options.random_tree_max_order,
                                            options.seed);
    });
    for (auto& part : parts) irrlab::merge_audit_partial(trees, std::move(part));
  }

  std::vector<irrlab::AuditResult> results(2);
  results[0].bound_id = "connected_quarter_n_squared";
  results[0].instances = connected.instances;
  results[0].violations = std::move(connected.violations);
  results[0].max_ratio = connected.max_ratio;
  results[1].bound_id = "tree_n_minus_2";
  results[1].instances = trees.instances;
  results[1].violations = std::move(trees.violations);
  results[1].max_ratio = trees.max_ratio;

  Report report;
  report.command = "oracle audit";
  report.is_oracle = true;
  report.parameters = {{"n_max", args.n_max},
                       {"threads", args.threads},
                       {"force", args.force},
                       {"seed", options.seed},
                       {"emit", args.emit}};
  report.results = results;
  report.tsv_header = {"bound_id", "instances", "violation_count", "max_ratio_num", "max_ratio_den"};
  for (const auto& r : results) {
    report.verified = report.verified && r.violations.empty();
    report.tsv_rows.push_back({r.bound_id, std::to_string(r.instances), std::to_string(r.violations.size()),
                               std::to_string(r.max_ratio.num), std::to_string(r.max_ratio.den)});
  }
  return emit_report(report, args.emit, t0);
}

int run_tree_ascent(const CommonArgs& args) {
  const auto t0 = Clock::now();
  const auto graphs = load_graphs(args.input, args.format);

  Report report;
  report.command = "tree ascent";
  report.parameters = {{"input", args.input}, {"format", args.format}, {"emit", args.emit}};
  report.results = json::array();
  report.tsv_header = {"tree", "step", "irr_t", "graph6"};

  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto chain = irrlab::star_ascent(graphs[i]);
    json steps = json::array();
    for (std::size_t s = 0; s < chain.size(); ++s) {
      const std::int64_t value = irrlab::irr_t(chain[s]);
      const std::string g6 = irrlab::to_graph6(chain[s]);
      steps.push_back({{"graph6", g6}, {"irr_t", value}});
      report.tsv_rows.push_back({std::to_string(i), std::to_string(s), std::to_string(value), g6});
    }
    report.results.push_back(
        {{"tree", i}, {"shift_count", chain.size() - 1}, {"steps", std::move(steps)}});
  }
  return emit_report(report, args.emit, t0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph irregularity toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  // IRRLAB_GUARD_OVERRIDE=1 behaves exactly like passing --force.
  const char* env_force = std::getenv("IRRLAB_GUARD_OVERRIDE");
  args.force = env_force && std::string(env_force) == "1";

  const auto add_emit = [&](CLI::App* cmd) {
    cmd->add_option("--emit", args.emit, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
  };
  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", args.input, "input file, '-' for stdin")->required();
    cmd->add_option("--format", args.format, "input format")
        ->check(CLI::IsMember({"graph6", "edges"}))
        ->capture_default_str();
  };
  const auto add_oracle_knobs = [&](CLI::App* cmd) {
    cmd->add_option("--threads", args.threads, "worker threads for partitioned scans")
        ->check(CLI::Range(1, 512))
        ->capture_default_str();
    cmd->add_flag("--force", args.force, "override enumeration guards");
  };

  int exit_code = 0;

  auto* compute = app.add_subcommand("compute", "irr and irr_t of input graphs");
  add_input(compute);
  add_emit(compute);
  compute->callback([&] { exit_code = run_compute(args); });

  auto* extremal = app.add_subcommand("extremal", "extremal values and constructions");
  extremal->require_subcommand(1);

  auto* ex_value = extremal->add_subcommand("value", "maximum total irregularity for an order");
  ex_value->add_option("--n", args.n, "graph order")->required();
  add_emit(ex_value);
  ex_value->callback([&] { exit_code = run_extremal_value(args); });

  auto* ex_construct = extremal->add_subcommand("construct", "build one extremal graph");
  ex_construct->add_option("--n", args.n, "graph order")->required();
  ex_construct->add_option("--q", args.q, "universal vertex count")->capture_default_str();
  ex_construct->add_option("--mask", args.mask, "hex mask of optional pairs")->capture_default_str();
  add_emit(ex_construct);
  ex_construct->callback([&] { exit_code = run_extremal_construct(args); });

  auto* ex_enumerate = extremal->add_subcommand("enumerate", "all family members at q = 1");
  ex_enumerate->add_option("--n", args.n, "graph order")->required();
  ex_enumerate->add_flag("--force", args.force, "override enumeration guards");
  add_emit(ex_enumerate);
  ex_enumerate->callback([&] { exit_code = run_extremal_enumerate(args); });

  auto* oracle = app.add_subcommand("oracle", "exhaustive verification scans");
  oracle->require_subcommand(1);

  auto* or_theorem = oracle->add_subcommand("theorem", "closed form vs sequence search");
  or_theorem->add_option("--n-min", args.n_min, "smallest order")->capture_default_str();
  or_theorem->add_option("--n-max", args.n_max, "largest order")->required();
  add_oracle_knobs(or_theorem);
  add_emit(or_theorem);
  or_theorem->callback([&] { exit_code = run_oracle_theorem(args); });

  auto* or_trees = oracle->add_subcommand("trees", "tree maximum vs tree-sequence search");
  or_trees->add_option("--n-min", args.n_min, "smallest order")->capture_default_str();
  or_trees->add_option("--n-max", args.n_max, "largest order")->required();
  add_oracle_knobs(or_trees);
  add_emit(or_trees);
  or_trees->callback([&] { exit_code = run_oracle_trees(args); });

  auto* or_census = oracle->add_subcommand("census", "exhaustive labeled census for one order");
  or_census->add_option("--n", args.n, "graph order")->required();
  add_oracle_knobs(or_census);
  add_emit(or_census);
  or_census->callback([&] { exit_code = run_oracle_census(args); });

  auto* or_audit = oracle->add_subcommand("audit", "bound audits over connected graphs and trees");
  or_audit->add_option("--n-max", args.n_max, "largest order for the connected scan")
      ->default_val(irrlab::kConnectedAuditGuard)
      ->capture_default_str();
  add_oracle_knobs(or_audit);
  add_emit(or_audit);
  or_audit->callback([&] { exit_code = run_oracle_audit(args); });

  auto* tree = app.add_subcommand("tree", "tree-specific operations");
  tree->require_subcommand(1);

  auto* tr_ascent = tree->add_subcommand("ascent", "pendant-shift chain up to the star");
  add_input(tr_ascent);
  add_emit(tr_ascent);
  tr_ascent->callback([&] { exit_code = run_tree_ascent(args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const irrlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
