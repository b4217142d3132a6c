#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skewlr/hasse.hpp"
#include "skewlr/staircase.hpp"

using namespace skewlr;

namespace {

std::vector<std::pair<std::string, SkewShape>> three_box_diagrams() {
  SkewShape single = from_partition({1});
  return {
      {"triple", direct_sum(direct_sum(single, single), single)},
      {"pair", SkewShape({3, 1}, {1})},
      {"hookshape", SkewShape({2, 2}, {1})},
      {"hook2", from_partition({2, 1})},
      {"column", from_partition({1, 1, 1})},
  };
}

}  // namespace

TEST_CASE("order on three-box diagrams") {
  HasseGraph g = build_order(three_box_diagrams());
  REQUIRE(g.nodes.size() == 4);
  CHECK(g.nodes[0].labels == std::vector<std::string>{"column"});
  CHECK(g.nodes[1].labels == std::vector<std::string>{"hook2", "hookshape"});
  CHECK(g.nodes[2].labels == std::vector<std::string>{"pair"});
  CHECK(g.nodes[3].labels == std::vector<std::string>{"triple"});

  CHECK(g.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 0}, {3, 2}});
  for (int i = 0; i < 4; ++i) CHECK(g.dominance[i][i]);
  CHECK(g.dominance[3][1]);       // via the reduction's removed edge
  CHECK_FALSE(g.dominance[1][0]); // hooks and the column are incomparable
  CHECK_FALSE(g.dominance[0][1]);

  std::string dot = emit_dot(g);
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("\"triple\" -> \"pair\"") != std::string::npos);
  CHECK(dot.find("\"hook2 = hookshape\"") != std::string::npos);

  nlohmann::json parsed = nlohmann::json::parse(hasse_json(g));
  REQUIRE(parsed["nodes"].size() == 4);
  CHECK(parsed["nodes"][1]["labels"] ==
        nlohmann::json::array({"hook2", "hookshape"}));
  CHECK(parsed["nodes"][2]["shape"] == "3,1/1");
  REQUIRE(parsed["edges"].size() == 3);
  CHECK(parsed["edges"][0] == nlohmann::json::array({2, 1}));
}

TEST_CASE("build_order validation") {
  CHECK(build_order({}).nodes.empty());
  CHECK_THROWS_AS(
      build_order({{"a", from_partition({1})}, {"b", from_partition({2})}}),
      std::invalid_argument);
  CHECK_THROWS_AS(build_order({{"", from_partition({1})}}),
                  std::invalid_argument);
}

TEST_CASE("transitive reduction of a chain") {
  HasseGraph g;
  g.nodes.resize(3);
  g.nodes[0].labels = {"a"};
  g.nodes[1].labels = {"b"};
  g.nodes[2].labels = {"c"};
  g.dominance = {{true, true, true}, {false, true, true},
                 {false, false, true}};
  HasseGraph reduced = transitive_reduction(g);
  CHECK(reduced.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  HasseGraph bad;
  bad.nodes.resize(2);
  bad.dominance = {{true, false}};
  CHECK_THROWS_AS(transitive_reduction(bad), std::invalid_argument);
}

TEST_CASE("order of a hook family") {
  std::vector<std::pair<std::string, SkewShape>> diagrams;
  for (Hook hk : hooks_of_size(6))
    diagrams.emplace_back(format_parts(hk.to_partition()),
                          family_member(hk, Composition(6, 1), 2));

  ComputeOptions opt;
  opt.workers = 4;
  HasseGraph g = build_order(diagrams, opt);
  REQUIRE(g.nodes.size() == 6);
  // Sorted labels here put node i at arm i+1.
  CHECK(g.nodes[0].labels == std::vector<std::string>{"1,1,1,1,1,1"});
  CHECK(g.nodes[5].labels == std::vector<std::string>{"6"});

  const std::set<std::pair<int, int>> expected{
      {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {2, 6}};
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      CAPTURE(i);
      CAPTURE(j);
      CHECK(g.dominance[i][j] == (expected.count({i + 1, j + 1}) > 0));
    }
  }
}
