#include <catch2/catch_amalgamated.hpp>

#include "deza/families.hpp"
#include "deza/graph6.hpp"

using namespace deza;

namespace {

bool same_adjacency(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return false;
  for (int u = 0; u < a.size(); ++u)
    for (int v = u + 1; v < a.size(); ++v)
      if (a.adjacent(u, v) != b.adjacent(u, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("graph6 frozen encodings") {
  // K4: size byte 'C', upper triangle 111111 -> '~'.
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  REQUIRE(to_graph6(k4) == "C~");
  // C5 column-major triangle bits 1010011001 -> "Dhc".
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  REQUIRE(to_graph6(c5) == "Dhc");
  // Triangle: bits 111 + 3 zero pad -> 'w'.
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  REQUIRE(to_graph6(k3) == "Bw");
  REQUIRE(to_graph6(Graph()) == "?");
  REQUIRE(to_graph6(Graph(1, {})) == "@");
}

TEST_CASE("graph6 decode matches encode") {
  REQUIRE(same_adjacency(from_graph6("C~"), Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  REQUIRE(from_graph6("?").size() == 0);
  REQUIRE(from_graph6("@").size() == 1);
  // Conventional header and trailing newline are tolerated.
  REQUIRE(same_adjacency(from_graph6(">>graph6<<Bw\n"), from_graph6("Bw")));
}

TEST_CASE("graph6 round trips over the named families") {
  std::vector<Graph> graphs = {petersen(),
                               triangular(6),
                               lattice(4),
                               complete_multipartite_nx2(3),
                               shrikhande(),
                               clebsch_seidel(),
                               schlafli_complement(),
                               chang(1),
                               chang(2),
                               chang(3)};
  for (const auto& g : graphs) {
    std::string code = to_graph6(g);
    Graph back = from_graph6(code);
    REQUIRE(same_adjacency(g, back));
    REQUIRE(to_graph6(back) == code);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  REQUIRE_THROWS_AS(from_graph6(""), Graph6Error);
  REQUIRE_THROWS_AS(from_graph6("\n"), Graph6Error);
  REQUIRE_THROWS_AS(from_graph6("C"), Graph6Error);       // missing body
  REQUIRE_THROWS_AS(from_graph6("C~~"), Graph6Error);     // trailing byte
  REQUIRE_THROWS_AS(from_graph6("B\x1f"), Graph6Error);   // byte below 63
  REQUIRE_THROWS_AS(from_graph6("Bx"), Graph6Error);      // nonzero padding
  REQUIRE_THROWS_AS(from_graph6("~"), Graph6Error);       // truncated size
}

TEST_CASE("label json round trip") {
  Graph g = triangular(4);
  auto labels = labels_from_json(labels_to_json(g));
  REQUIRE(labels == g.labels());
  REQUIRE(labels.front() == "{1,2}");
  REQUIRE_THROWS_AS(labels_from_json("{"), Graph6Error);
  REQUIRE_THROWS_AS(labels_from_json("{\"a\":1}"), Graph6Error);
  REQUIRE_THROWS_AS(labels_from_json("[1,2]"), Graph6Error);
}
