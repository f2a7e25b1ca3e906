#include <catch2/catch_amalgamated.hpp>

#include "deza/core.hpp"

using namespace deza;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = cycle(5);
  REQUIRE(g.size() == 5);
  REQUIRE(g.edge_count() == 5);
  for (int v = 0; v < 5; ++v) REQUIRE(g.degree(v) == 2);
  REQUIRE(g.adjacent(0, 1));
  REQUIRE(g.adjacent(1, 0));
  REQUIRE_FALSE(g.adjacent(0, 2));
  REQUIRE(g.neighbors(0) == std::vector<int>{1, 4});
  REQUIRE(g.is_regular());
  Graph empty;
  REQUIRE(empty.size() == 0);
  REQUIRE(empty.is_regular());
}

TEST_CASE("graph construction rejects bad input") {
  REQUIRE_THROWS_AS(Graph(-1, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);
  REQUIRE_THROWS_AS(Graph(3, {{0, 1}}, {"a", "b"}), std::invalid_argument);
  Graph g = cycle(4);
  REQUIRE_THROWS_AS(g.adjacent(0, 4), std::out_of_range);
  REQUIRE_THROWS_AS(g.degree(-1), std::out_of_range);
}

TEST_CASE("from_rows validates and masks") {
  // A 2-path 0-1-2 packed by hand.
  std::vector<uint64_t> rows = {0b010, 0b101, 0b010};
  Graph g = Graph::from_rows(3, rows);
  REQUIRE(g.adjacent(0, 1));
  REQUIRE(g.adjacent(1, 2));
  REQUIRE_FALSE(g.adjacent(0, 2));

  REQUIRE_THROWS_AS(Graph::from_rows(3, {0b010, 0b101}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph::from_rows(3, {0b011, 0b101, 0b010}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph::from_rows(3, {0b010, 0b100, 0b010}), std::invalid_argument);

  // Garbage beyond column n-1 is cleared, not reported as edges.
  std::vector<uint64_t> padded = {0b010 | (uint64_t(1) << 40), 0b101 | (uint64_t(1) << 40),
                                  0b010 | (uint64_t(1) << 40)};
  Graph p = Graph::from_rows(3, padded);
  REQUIRE(p.degree(0) == 1);
  REQUIRE(p.degree(1) == 2);
}

TEST_CASE("complement") {
  Graph g = cycle(5);
  Graph c = complement(g);
  REQUIRE(c.edge_count() == 5);  // C5 is self-complementary in count
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) REQUIRE(c.adjacent(u, v) == !g.adjacent(u, v));
  Graph cc = complement(c);
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) REQUIRE(cc.adjacent(u, v) == g.adjacent(u, v));
  REQUIRE(complement(complete(4)).edge_count() == 0);

  Graph labeled(2, {{0, 1}}, {"x", "y"});
  REQUIRE(complement(labeled).labels() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("bfs and diameter") {
  Graph p = path(4);
  REQUIRE(bfs_distances(p, 0) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(diameter(p) == std::optional<int>(3));
  REQUIRE(diameter(cycle(6)) == std::optional<int>(3));
  REQUIRE(diameter(complete(4)) == std::optional<int>(1));

  Graph two(4, {{0, 1}, {2, 3}});
  REQUIRE_FALSE(diameter(two).has_value());
  REQUIRE(bfs_distances(two, 0) == std::vector<int>{0, 1, -1, -1});
  REQUIRE_FALSE(is_connected(two));
  REQUIRE(is_connected(cycle(6)));
  REQUIRE_THROWS_AS(bfs_distances(p, 9), std::out_of_range);
}

TEST_CASE("connected components") {
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  REQUIRE(comps[0] == std::vector<int>{0, 1, 2});
  REQUIRE(comps[1] == std::vector<int>{3, 4});
  REQUIRE(comps[2] == std::vector<int>{5});
}

TEST_CASE("second neighborhood") {
  REQUIRE(second_neighborhood(cycle(6), 0) == std::vector<int>{2, 4});
  REQUIRE(second_neighborhood(complete(4), 0).empty());
}

TEST_CASE("induced subgraph keeps order and labels") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {"a", "b", "c", "d"});
  Graph sub = induced_subgraph(g, {3, 0, 1});
  REQUIRE(sub.size() == 3);
  REQUIRE(sub.adjacent(0, 1));   // 3-0
  REQUIRE(sub.adjacent(1, 2));   // 0-1
  REQUIRE_FALSE(sub.adjacent(0, 2));
  REQUIRE(sub.labels() == std::vector<std::string>{"d", "a", "b"});
}

TEST_CASE("is_clique") {
  Graph g = complete(4);
  REQUIRE(is_clique(g, {0, 1, 2, 3}));
  REQUIRE(is_clique(g, {2}));
  REQUIRE(is_clique(g, {}));
  REQUIRE_FALSE(is_clique(cycle(4), {0, 1, 2}));
}

TEST_CASE("common neighbors against a direct count") {
  Graph g = cycle(6);
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v) {
      if (u == v) continue;
      int direct = 0;
      for (int w = 0; w < 6; ++w)
        if (g.adjacent(u, w) && g.adjacent(v, w)) ++direct;
      REQUIRE(g.common_neighbors(u, v) == direct);
    }
  REQUIRE_THROWS_AS(g.common_neighbors(2, 2), std::invalid_argument);
}

TEST_CASE("labels") {
  Graph g(3, {{0, 1}}, {"p", "q", "r"});
  REQUIRE(g.has_labels());
  REQUIRE(g.label(1) == "q");
  REQUIRE(g.vertex_by_label("r") == 2);
  REQUIRE(g.vertex_by_label("zz") == -1);
  Graph bare = cycle(3);
  REQUIRE_FALSE(bare.has_labels());
  REQUIRE(bare.vertex_by_label("p") == -1);
  REQUIRE_THROWS_AS(bare.label(0), std::logic_error);
}
