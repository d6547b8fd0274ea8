#include <doctest.h>

#include <stdexcept>

#include "gallai/json_io.hpp"
#include "gallai/reduction.hpp"
#include "helpers.hpp"

using namespace gallai;
using testutil::make;

TEST_CASE("multigraph documents round trip byte for byte") {
  auto g = testutil::g3();
  auto doc = to_json(g);
  CHECK(doc["palette"] == json::array({"A", "B", "C"}));
  CHECK(doc["vertices"] == 3);
  auto back = multigraph_from_json(doc);
  CHECK(back == g);
  CHECK(to_json(back).dump() == doc.dump());
}

TEST_CASE("multigraph parser is strict") {
  auto good = to_json(testutil::g3());

  auto extra = good;
  extra["note"] = "hello";
  CHECK_THROWS_AS(multigraph_from_json(extra), std::invalid_argument);

  auto missing = good;
  missing["edges"].erase(0);
  CHECK_THROWS_AS(multigraph_from_json(missing), std::invalid_argument);

  auto doubled = good;
  doubled["edges"].push_back(doubled["edges"][0]);
  CHECK_THROWS_AS(multigraph_from_json(doubled), std::invalid_argument);

  auto reversed = good;
  reversed["edges"][0]["u"] = 1;
  reversed["edges"][0]["v"] = 0;
  CHECK_THROWS_AS(multigraph_from_json(reversed), std::invalid_argument);

  auto foreign = good;
  foreign["edges"][0]["colors"] = json::array({"Z"});
  CHECK_THROWS_AS(multigraph_from_json(foreign), std::invalid_argument);

  auto empty = good;
  empty["edges"][0]["colors"] = json::array();
  CHECK_THROWS_AS(multigraph_from_json(empty), std::invalid_argument);

  auto repeated = good;
  repeated["edges"][0]["colors"] = json::array({"A", "A"});
  CHECK_THROWS_AS(multigraph_from_json(repeated), std::invalid_argument);
}

TEST_CASE("malformed text is an invalid_argument, not a parser leak") {
  CHECK_THROWS_AS(parse_text("{ not json"), std::invalid_argument);
  CHECK_NOTHROW(parse_text("{}"));
}

TEST_CASE("mixed graph documents round trip through their serialization") {
  auto g = make(4, testutil::abc(),
                {{0, 1, {0, 1}}, {0, 2, {0, 1}}, {1, 2, {0, 1}},
                 {0, 3, {2}}, {1, 3, {2}}, {2, 3, {2}}});
  auto seq = decompose(g);
  for (const auto& level : seq.levels) {
    auto doc = to_json(level);
    auto back = mixed_graph_from_json(doc);
    CHECK(to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("mixed graph parser rejects conflicting edges") {
  auto m = MixedGraph::abstract_nodes(2, testutil::abc());
  m.undirected.push_back({0, 1, ColorSet::single(0)});
  auto doc = to_json(m);

  auto doubled = doc;
  doubled["directed"].push_back(
      {{"from", 0}, {"to", 1}, {"colors", {"A", "B"}}, {"sigma_class", 0}});
  CHECK_THROWS_AS(mixed_graph_from_json(doubled), std::invalid_argument);

  auto backwards = doc;
  backwards["undirected"][0]["a"] = 1;
  backwards["undirected"][0]["b"] = 0;
  CHECK_THROWS_AS(mixed_graph_from_json(backwards), std::invalid_argument);

  auto unknown = doc;
  unknown["undirected"][0]["a"] = 7;
  CHECK_THROWS_AS(mixed_graph_from_json(unknown), std::invalid_argument);
}

TEST_CASE("decomposition documents carry levels and tau names") {
  auto full = make(3, testutil::abc(),
                   {{0, 1, {0, 1}}, {0, 2, {0, 1}}, {1, 2, {0, 1}}});
  auto doc = to_json(decompose(full));
  CHECK(doc["vertices"] == 3);
  REQUIRE(doc["levels"].size() == 2);
  CHECK(doc["levels"][0]["directed"].size() == 3);
  REQUIRE(doc["tau"].size() == 2);
  CHECK(doc["tau"][0][0] == json::array({"A", "B"}));
  CHECK(doc["tau"][0][2] == json::array());
  CHECK(doc["tau"][1][0] == json::array({"A", "B"}));
}

TEST_CASE("construction specs accept string or array signature values") {
  json doc = {
      {"palette", {"A", "B"}},
      {"level", 0},
      {"blocks", {{{"id", 0}, {"vertices", {0}}, {"root_child", nullptr},
                   {"base_root", nullptr}},
                  {{"id", 1}, {"vertices", {1}}, {"root_child", nullptr},
                   {"base_root", nullptr}}}},
      {"undirected", json::array()},
      {"directed", {{{"from", 1}, {"to", 0}, {"colors", {"A", "B"}},
                     {"sigma_class", 0}}}},
      {"leaves", {{{"vertex", 0},
                   {"graph", {{"palette", {"A", "B"}}, {"vertices", 1},
                              {"edges", json::array()}}}},
                  {{"vertex", 1},
                   {"graph", {{"palette", {"A", "B"}}, {"vertices", 2},
                              {"edges", {{{"u", 0}, {"v", 1},
                                          {"colors", {"A", "B"}}}}}}}}}},
      {"signatures", {{{"edge", {1, 0}},
                       {"map", {{"0", "A"}, {"1", {"B"}}}}}}},
  };
  auto spec = construction_spec_from_json(doc);
  CHECK(spec.base.node_count() == 2);
  REQUIRE(spec.leaves.size() == 2);
  CHECK(spec.leaves[1].graph.vertex_count() == 2);
  REQUIRE(spec.signatures.size() == 1);
  CHECK(spec.signatures[0].from == 1);
  CHECK(spec.signatures[0].signature.entries.size() == 2);
  CHECK(spec.signatures[0].signature.entries[0].second == ColorSet::single(0));
  CHECK(spec.signatures[0].signature.entries[1].second == ColorSet::single(1));

  auto realized = gamma(spec);
  CHECK(realized.vertex_count() == 3);

  auto bad = doc;
  bad["signatures"][0]["map"]["x"] = "A";
  CHECK_THROWS_AS(construction_spec_from_json(bad), std::invalid_argument);
}

TEST_CASE("census records serialize flat") {
  CensusRecord r;
  r.vertex_count = 3;
  r.palette_size = 3;
  r.multiplicity_cap = 1;
  r.total_labeled = 27;
  r.gallai_labeled = 21;
  auto doc = to_json(r);
  CHECK(doc["vertices"] == 3);
  CHECK(doc["total_labeled"] == 27);
  CHECK(doc["gallai_labeled"] == 21);
  CHECK(doc.size() == 11);
}
