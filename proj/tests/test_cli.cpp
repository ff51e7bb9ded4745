// End-to-end tests for the irrlab binary. Each case shells out to the real
// executable (path injected by the build as IRRLAB_CLI_PATH), captures stdout
// and stderr into temp files and checks exit codes and report contents.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const char* tag) {
  static int counter = 0;
  return std::string("cli_test_") + tag + "_" + std::to_string(counter++) + ".tmp";
}

// Runs `irrlab <args>` with optional stdin text and environment prefix.
RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  const std::string& env_prefix = "") {
  const std::string out_path = temp_path("out");
  const std::string err_path = temp_path("err");
  const std::string in_path = temp_path("in");
  {
    std::ofstream in(in_path, std::ios::binary);
    in << stdin_text;
  }
  const std::string cmd = env_prefix + std::string(IRRLAB_CLI_PATH) + " " + args + " < " + in_path +
                          " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp_file(out_path);
  result.err = slurp_file(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  std::remove(in_path.c_str());
  return result;
}

json parse_report(const RunResult& r) { return json::parse(r.out); }

// elapsed_ms varies run to run; drop it before comparing reports.
json strip_timing(json j) {
  j.erase("elapsed_ms");
  return j;
}

}  // namespace

TEST_CASE("compute on graph6 input") {
  const auto r = run_cli("compute --input -", "Cs\n");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  CHECK(report["command"] == "compute");
  REQUIRE(report["results"].size() == 1);
  const json& row = report["results"][0];
  CHECK(row["n"] == 4);
  CHECK(row["m"] == 3);
  CHECK(row["irr"] == 6);
  CHECK(row["irr_t"] == 6);
  CHECK(row["degree_sequence"] == json::array({3, 1, 1, 1}));
  CHECK(!report.contains("verified"));  // compute is not an oracle
}

TEST_CASE("compute on an edge list") {
  const auto r = run_cli("compute --input - --format edges",
                         "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  const json& row = report["results"][0];
  CHECK(row["n"] == 4);
  CHECK(row["m"] == 6);
  CHECK(row["irr"] == 0);
  CHECK(row["irr_t"] == 0);
}

TEST_CASE("compute TSV mirrors the JSON values") {
  const auto r = run_cli("compute --input - --emit tsv", "Cs\nC~\n");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# command: compute\n") != std::string::npos);
  CHECK(r.out.find("index\tn\tm\tirr\tirr_t\tdegree_sequence\n") != std::string::npos);
  CHECK(r.out.find("0\t4\t3\t6\t6\t3,1,1,1\n") != std::string::npos);
  CHECK(r.out.find("1\t4\t6\t0\t0\t3,3,3,3\n") != std::string::npos);
}

TEST_CASE("malformed input exits 2 with a line diagnostic") {
  const auto r = run_cli("compute --input -", "Cs\nB@\n");
  CHECK(r.exit_code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("line 2") != std::string::npos);

  const auto empty = run_cli("compute --input -", "");
  CHECK(empty.exit_code == 2);

  const auto bad_flag = run_cli("compute --no-such-flag", "");
  CHECK(bad_flag.exit_code == 2);
}

TEST_CASE("extremal value") {
  const auto r = run_cli("extremal value --n 8");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  CHECK(report["results"]["n"] == 8);
  CHECK(report["results"]["max_irr_t"] == 68);
}

TEST_CASE("extremal construct") {
  const auto base = run_cli("extremal construct --n 5");
  REQUIRE(base.exit_code == 0);
  const json b = parse_report(base)["results"];
  CHECK(b["degree_sequence"] == json::array({4, 2, 2, 1, 1}));
  CHECK(b["irr_t"] == 14);
  CHECK(b["mask"] == "0x0");
  CHECK(b["optional_pairs"] == json::array({json::array({1, 3})}));

  const auto masked = run_cli("extremal construct --n 5 --mask 0x1");
  REQUIRE(masked.exit_code == 0);
  const json m = parse_report(masked)["results"];
  CHECK(m["degree_sequence"] == json::array({4, 3, 2, 2, 1}));
  CHECK(m["irr_t"] == 14);

  const auto bad = run_cli("extremal construct --n 5 --mask 0x2");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("extremal enumerate") {
  const auto r = run_cli("extremal enumerate --n 8");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  CHECK(report["results"]["count"] == 8);
  std::int64_t max_seen = 0;
  for (const auto& member : report["results"]["members"])
    max_seen = std::max(max_seen, member["irr_t"].get<std::int64_t>());
  CHECK(max_seen == 68);
  for (const auto& member : report["results"]["members"])
    CHECK(member["irr_t"].get<std::int64_t>() == 68);
}

TEST_CASE("oracle theorem verifies the closed form") {
  const auto r = run_cli("oracle theorem --n-max 8");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  CHECK(report["verified"] == true);
  CHECK(report["results"].size() == 7);  // orders 2..8
  for (const auto& row : report["results"]) CHECK(row["match"] == true);
}

TEST_CASE("oracle trees verifies the star") {
  const auto r = run_cli("oracle trees --n-max 10 --emit tsv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("# verified: true") != std::string::npos);
}

TEST_CASE("oracle census") {
  const auto r = run_cli("oracle census --n 4");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  CHECK(report["verified"] == true);
  CHECK(report["results"]["max_value"] == 6);
  CHECK(report["results"]["class_count"] == 4);
  CHECK(report["results"]["family_subset_confirmed"] == true);
  std::int64_t total = 0;
  for (const auto& c : report["results"]["labeled_counts"]) total += c.get<std::int64_t>();
  CHECK(total == 32);
}

TEST_CASE("oracle audit") {
  const auto r = run_cli("oracle audit --n-max 5");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  CHECK(report["verified"] == true);
  REQUIRE(report["results"].size() == 2);
  CHECK(report["results"][0]["bound_id"] == "connected_quarter_n_squared");
  CHECK(report["results"][0]["violations"] == json::array());
  CHECK(report["results"][1]["bound_id"] == "tree_n_minus_2");
  CHECK(report["results"][1]["max_ratio"] == json({{"num", 1}, {"den", 1}}));
}

TEST_CASE("guards exit 2 and the override lifts them") {
  const auto census = run_cli("oracle census --n 9");
  CHECK(census.exit_code == 2);
  CHECK(census.err.find("guard") != std::string::npos);

  const auto trees = run_cli("oracle trees --n-max 45");
  CHECK(trees.exit_code == 2);

  const auto forced = run_cli("oracle trees --n-min 45 --n-max 45", "", "IRRLAB_GUARD_OVERRIDE=1 ");
  REQUIRE(forced.exit_code == 0);
  CHECK(parse_report(forced)["verified"] == true);
  CHECK(forced.err.find("warning") != std::string::npos);

  const auto flag_forced = run_cli("oracle trees --n-min 45 --n-max 45 --force");
  REQUIRE(flag_forced.exit_code == 0);
  CHECK(strip_timing(parse_report(flag_forced))["results"] ==
        strip_timing(parse_report(forced))["results"]);
}

TEST_CASE("threaded runs match single-thread runs byte for byte") {
  const auto one_a = run_cli("oracle theorem --n-max 9");
  const auto one_b = run_cli("oracle theorem --n-max 9");
  const auto four = run_cli("oracle theorem --n-max 9 --threads 4");
  REQUIRE(one_a.exit_code == 0);
  REQUIRE(four.exit_code == 0);
  CHECK(strip_timing(parse_report(one_a)) == strip_timing(parse_report(one_b)));
  // Threaded partitions merge in enumeration order, so everything except the
  // thread-count parameter matches.
  json a = strip_timing(parse_report(one_a));
  json c = strip_timing(parse_report(four));
  CHECK(a["results"] == c["results"]);
  CHECK(a["verified"] == c["verified"]);

  const auto census1 = run_cli("oracle census --n 5");
  const auto census4 = run_cli("oracle census --n 5 --threads 4");
  CHECK(strip_timing(parse_report(census1))["results"] ==
        strip_timing(parse_report(census4))["results"]);

  const auto audit1 = run_cli("oracle audit --n-max 5");
  const auto audit4 = run_cli("oracle audit --n-max 5 --threads 4");
  CHECK(strip_timing(parse_report(audit1))["results"] ==
        strip_timing(parse_report(audit4))["results"]);
}

TEST_CASE("tree ascent") {
  // Path on four vertices: one shift reaches the star.
  const auto r = run_cli("tree ascent --input -", "CU\n");
  REQUIRE(r.exit_code == 0);
  const json report = parse_report(r);
  REQUIRE(report["results"].size() == 1);
  const json& row = report["results"][0];
  CHECK(row["shift_count"] == 1);
  REQUIRE(row["steps"].size() == 2);
  CHECK(row["steps"][0]["irr_t"] == 4);
  CHECK(row["steps"][1]["irr_t"] == 6);

  const auto not_tree = run_cli("tree ascent --input -", "C~\n");
  CHECK(not_tree.exit_code == 2);
}

// Exit code 1 is reserved for an oracle that completes its scan and finds a
// mismatch. The checked statements hold, so no input can produce it here;
// the wiring is covered by unit tests on the verified flag instead.
