#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gallai/json_io.hpp"
#include "helpers.hpp"

using namespace gallai;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* env = std::getenv("GALLAI_CLI");
  REQUIRE_MESSAGE(env != nullptr, "GALLAI_CLI must point at the tool binary");
  return env;
}

// Runs a full shell line, capturing stdout; callers append their own
// redirections when stderr matters.
CliResult run_shell(const std::string& command) {
  CliResult r;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

CliResult run_cli(const std::string& args) {
  return run_shell("'" + cli_path() + "' " + args + " 2>/dev/null");
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "gallai_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

fs::path g3_file() {
  return write_file("g3.json", to_json(testutil::g3()).dump() + "\n");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("check reports the three predicates and any witnesses") {
  auto r = run_cli("check " + g3_file().string());
  CHECK(r.exit_code == 0);
  auto doc = parse_text(r.out);
  CHECK(doc["gallai"] == true);
  CHECK(doc["reduced"] == true);
  CHECK(doc["maximal"] == false);
  CHECK(doc["rainbow_witnesses"].empty());

  auto bad = write_file("rainbow.json",
                        to_json(testutil::make(3, testutil::abc(),
                                               {{0, 1, {0}},
                                                {0, 2, {1}},
                                                {1, 2, {2}}}))
                            .dump());
  auto rb = run_cli("check " + bad.string());
  CHECK(rb.exit_code == 0);
  auto rdoc = parse_text(rb.out);
  CHECK(rdoc["gallai"] == false);
  CHECK(rdoc["rainbow_witnesses"].size() == 1);
}

TEST_CASE("reduce collapses and maximalize closes") {
  auto collapsing = write_file(
      "collapsing.json",
      to_json(testutil::make(4, testutil::abc(),
                             {{0, 1, {0}}, {0, 2, {1}}, {0, 3, {1}},
                              {1, 2, {1}}, {1, 3, {1}}, {2, 3, {1}}}))
          .dump());
  auto r = run_cli("reduce " + collapsing.string());
  CHECK(r.exit_code == 0);
  CHECK(multigraph_from_json(parse_text(r.out)).vertex_count() == 1);

  auto m = run_cli("maximalize " + g3_file().string());
  CHECK(m.exit_code == 0);
  auto closed = multigraph_from_json(parse_text(m.out));
  CHECK(closed == testutil::make(3, testutil::abc(),
                                 {{0, 1, {0, 1}}, {0, 2, {0, 1}},
                                  {1, 2, {0, 1}}}));
}

TEST_CASE("subcommands chain through stdin") {
  auto exe = "'" + cli_path() + "'";
  auto r = run_shell(exe + " reduce " + g3_file().string() + " 2>/dev/null | " +
                     exe + " maximalize - 2>/dev/null | " + exe +
                     " decompose - 2>/dev/null");
  CHECK(r.exit_code == 0);
  auto doc = parse_text(r.out);
  CHECK(doc["levels"].size() == 2);
  CHECK(doc["tau"][1][0] == json::array({"A", "B"}));
}

TEST_CASE("decompose writes one dot file per level") {
  auto dots = scratch() / "dots";
  fs::remove_all(dots);
  auto r = run_cli("decompose " + g3_file().string() + " --dot " +
                   dots.string());
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(dots / "level_0.dot"));
  std::ifstream in(dots / "level_0.dot");
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("digraph") != std::string::npos);
}

TEST_CASE("enumerate emits the record first, then representatives") {
  auto r = run_cli("enumerate --max-size 3 --palette A,B,C"
                   " --multiplicity-cap 2 --all");
  CHECK(r.exit_code == 0);
  auto lines = lines_of(r.out);
  REQUIRE(!lines.empty());
  auto record = parse_text(lines[0]);
  CHECK(record["vertices"] == 3);
  CHECK(record["multiplicity_cap"] == 2);
  std::uint64_t classes = record["reduced_maximal_iso"].get<std::uint64_t>();
  REQUIRE(lines.size() == 1 + classes);
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK_NOTHROW(multigraph_from_json(parse_text(lines[i])));
}

TEST_CASE("output bytes are stable across runs") {
  auto args = {std::string("check ") + g3_file().string(),
               std::string("enumerate --max-size 3 --palette A,B,C"
                           " --multiplicity-cap 1"),
               std::string("decompose ") + g3_file().string()};
  for (const auto& a : args) {
    auto first = run_cli(a);
    auto second = run_cli(a);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("construction subcommands emit one document per line") {
  auto seed = MixedGraph::abstract_nodes(1, testutil::abc());
  auto seed_file = write_file("seed.json", to_json(seed).dump());
  auto t = run_cli("delta-t " + seed_file.string() + " --colors A,B");
  CHECK(t.exit_code == 0);
  auto tree_lines = lines_of(t.out);
  REQUIRE(tree_lines.size() == 1);
  auto tree = mixed_graph_from_json(parse_text(tree_lines[0]));
  CHECK(tree.node_count() == 2);

  auto tree_file = write_file("tree.json", tree_lines[0]);
  auto g = run_cli("construct " + tree_file.string() + " --all --max-size 3");
  CHECK(g.exit_code == 0);
  auto realizations = lines_of(g.out);
  CHECK(realizations.size() == 2);
  for (const auto& line : realizations)
    CHECK_NOTHROW(multigraph_from_json(parse_text(line)));

  auto f = run_cli("delta-f " + tree_file.string() + " --max-size 4");
  CHECK(f.exit_code == 0);
  CHECK(lines_of(f.out).size() == 44);

  // The sigma restriction thins delta-t output.
  auto joined = MixedGraph::abstract_nodes(2, testutil::abc());
  joined.undirected.push_back({0, 1, ColorSet::single(0)});
  auto joined_file = write_file("joined.json", to_json(joined).dump());
  auto wide = run_cli("delta-t " + joined_file.string() + " --colors A,B");
  auto narrow = run_cli("delta-t " + joined_file.string() +
                        " --colors A,B --restrict-sigma");
  CHECK(lines_of(wide.out).size() == 2);
  CHECK(lines_of(narrow.out).size() == 1);
}

TEST_CASE("verification subcommands gate their exit codes") {
  auto v = run_cli("verify-completeness --vertices 2 --colors 2");
  CHECK(v.exit_code == 0);
  auto doc = parse_text(v.out);
  CHECK(doc["passed"] == true);

  auto closed = write_file(
      "closed.json",
      to_json(testutil::make(3, testutil::abc(),
                             {{0, 1, {0, 1}}, {0, 2, {0, 1}}, {1, 2, {0, 1}}}))
          .dump());
  auto ok = run_cli("roundtrip " + closed.string());
  CHECK(ok.exit_code == 0);
  CHECK(parse_text(ok.out)["passed"] == true);

  // Preconditions exit 2, not 1: the input is outside the contract.
  auto open = run_cli("roundtrip " + g3_file().string());
  CHECK(open.exit_code == 2);
}

TEST_CASE("failures surface as exit code 2") {
  auto garbage = write_file("garbage.json", "{ not json");
  CHECK(run_cli("check " + garbage.string()).exit_code == 2);

  auto bad = write_file("rainbow2.json",
                        to_json(testutil::make(3, testutil::abc(),
                                               {{0, 1, {0}},
                                                {0, 2, {1}},
                                                {1, 2, {2}}}))
                            .dump());
  CHECK(run_cli("maximalize " + bad.string()).exit_code == 2);
  CHECK(run_cli("no-such-command").exit_code == 2);
  CHECK(run_cli("enumerate --max-size 9 --palette A --multiplicity-cap 1")
            .exit_code == 2);
}

TEST_CASE("the search ceiling is adjustable through the environment") {
  auto r = run_shell("GALLAI_MAX_SEARCH=6,4 '" + cli_path() +
                     "' enumerate --max-size 6 --palette A"
                     " --multiplicity-cap 1 2>/dev/null");
  CHECK(r.exit_code == 0);
  CHECK(parse_text(r.out)["total_labeled"] == 1);
}

TEST_CASE("enumerate output matches the checked-in fixture") {
  const char* dir = std::getenv("GALLAI_FIXTURES");
  REQUIRE_MESSAGE(dir != nullptr, "GALLAI_FIXTURES must point at tests/fixtures");
  std::ifstream in(fs::path(dir) / "census_n3_c3_cap2.jsonl");
  REQUIRE(in.good());
  std::stringstream expected;
  expected << in.rdbuf();
  auto r = run_cli("enumerate --max-size 3 --palette A,B,C"
                   " --multiplicity-cap 2 --all");
  CHECK(r.exit_code == 0);
  CHECK(r.out == expected.str());
}
