#include <catch2/catch_amalgamated.hpp>

#include "deza/classify.hpp"
#include "deza/delta.hpp"

using namespace deza;

TEST_CASE("canonical involutions") {
  // Lattice, n = 4, i = 1: rows 1 and 2 trade places.
  Perm p = i_automorphism(4, 1);
  REQUIRE(p == Perm{4, 5, 6, 7, 0, 1, 2, 3, 8, 9, 10, 11, 12, 13, 14, 15});
  REQUIRE(is_involution(p));
  REQUIRE(is_automorphism(lattice(4), p));
  REQUIRE(is_delta_automorphism(complement(lattice(4)), p));
  REQUIRE_THROWS_AS(i_automorphism(4, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(i_automorphism(4, 3), std::invalid_argument);

  // Triangular, n = 5: {1,z} <-> {2,z} for z >= 3.
  Perm q = pair_automorphism_t(5);
  REQUIRE(q == Perm{0, 4, 5, 6, 1, 2, 3, 7, 8, 9});
  REQUIRE(is_involution(q));
  REQUIRE(is_automorphism(triangular(5), q));
  REQUIRE(is_delta_automorphism(complement(triangular(5)), q));
  REQUIRE_FALSE(is_delta_automorphism(triangular(5), q));  // 2-cycles are edges there
  REQUIRE_THROWS_AS(pair_automorphism_t(2), std::invalid_argument);
}

TEST_CASE("deza_from rejects bad involutions in order") {
  Graph pet = petersen();
  REQUIRE_THROWS_WITH(deza_from(pet, Perm{0, 1}),
                      Catch::Matchers::ContainsSubstring("not a permutation"));
  Perm three = identity_perm(10);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  REQUIRE_THROWS_WITH(deza_from(pet, three),
                      Catch::Matchers::ContainsSubstring("not an involution"));
  REQUIRE_THROWS_WITH(deza_from(pet, identity_perm(10)),
                      Catch::Matchers::ContainsSubstring("identity"));
  Perm swap01 = identity_perm(10);
  std::swap(swap01[0], swap01[1]);
  REQUIRE_FALSE(is_automorphism(pet, swap01));
  REQUIRE_THROWS_WITH(deza_from(pet, swap01),
                      Catch::Matchers::ContainsSubstring("not an automorphism"));
  // On T(5) the same pair swap is an automorphism, but its 2-cycles are edges.
  REQUIRE_THROWS_WITH(deza_from(triangular(5), pair_automorphism_t(5)),
                      Catch::Matchers::ContainsSubstring("adjacent"));
}

TEST_CASE("deza_from rejects out-of-scope strongly regular input") {
  // K_{3x2} has mu = k; swapping the two vertices of one part is a valid
  // involution shape, but the graph is outside the construction's domain.
  Graph k32 = complete_multipartite_nx2(3);
  Perm swap_part = identity_perm(6);
  std::swap(swap_part[0], swap_part[1]);
  REQUIRE(is_delta_automorphism(k32, swap_part));
  REQUIRE_THROWS_AS(deza_from(k32, swap_part), std::domain_error);

  // Clebsch model has lambda = mu: the swap returns an isomorphic SRG, so the
  // construction refuses. Translation by 0001 is a valid involution for it.
  Graph cl = clebsch_seidel();
  Perm xor1(16);
  for (int v = 0; v < 16; ++v) xor1[v] = v ^ 1;
  REQUIRE(is_delta_automorphism(cl, xor1));
  REQUIRE_THROWS_WITH(deza_from(cl, xor1), Catch::Matchers::ContainsSubstring("lambda = mu"));

  // T(4) complement is a perfect matching: disconnected, not an SRG at all.
  REQUIRE_THROWS_AS(triangular_deza(4), std::domain_error);
}

TEST_CASE("swapped triangular graphs") {
  Graph dz = triangular_deza(6);
  REQUIRE(dz.size() == 15);
  REQUIRE(dz.is_regular());
  REQUIRE(dz.degree(0) == 6);
  auto params = classify_deza(dz);
  REQUIRE(params.has_value());
  REQUIRE(*params == DezaParams{15, 6, 3, 1, true});
  REQUIRE_FALSE(classify_srg(dz).has_value());
  REQUIRE(diameter(dz) == std::optional<int>(2));
  // Labels survive the swap.
  REQUIRE(dz.vertex_by_label("{1,2}") == 0);

  // n = 5 is the degenerate end: still a Deza graph, but diameter 3.
  Graph d5 = triangular_deza(5);
  REQUIRE(*classify_deza(d5) == DezaParams{10, 3, 1, 0, false});
  REQUIRE(diameter(d5) == std::optional<int>(3));
}

TEST_CASE("swapped triangular adjacency follows the row-swap formula") {
  int n = 6;
  Graph dz = triangular_deza(n);
  Graph gbar = complement(triangular(n));
  Perm phi = pair_automorphism_t(n);
  for (int x = 0; x < dz.size(); ++x)
    for (int y = 0; y < dz.size(); ++y) {
      if (x == y) continue;
      REQUIRE(dz.adjacent(x, y) == gbar.adjacent(phi[x], y));
      REQUIRE(gbar.adjacent(phi[x], y) == gbar.adjacent(x, phi[y]));  // symmetry of the rule
    }
}

TEST_CASE("swapped lattice graphs") {
  for (int n : {3, 4, 5})
    for (int i = 1; 2 * i <= n; ++i) {
      Graph dz = lattice_deza(n, i);
      auto params = classify_deza(dz);
      REQUIRE(params.has_value());
      REQUIRE(*params == DezaParams{n * n, (n - 1) * (n - 1), (n - 1) * (n - 2),
                                    (n - 2) * (n - 2), true});
      REQUIRE_FALSE(classify_srg(dz).has_value());
    }
  REQUIRE_THROWS_AS(lattice_deza(4, 3), std::invalid_argument);
}

TEST_CASE("census on small complements, frozen counts") {
  // Triangular complements: only the point-pair swaps survive, one class.
  auto t5 = enumerate_delta_automorphisms(complement(triangular(5)));
  REQUIRE(t5.count() == 10);
  REQUIRE(t5.classes.size() == 1);
  auto t6 = enumerate_delta_automorphisms(complement(triangular(6)));
  REQUIRE(t6.count() == 15);
  REQUIRE(t6.classes.size() == 1);

  // Lattice complements: row or column involutions only; classes split by
  // the number of swapped pairs.
  auto l3 = enumerate_delta_automorphisms(complement(lattice(3)));
  REQUIRE(l3.count() == 6);
  REQUIRE(l3.classes.size() == 1);
  auto l4 = enumerate_delta_automorphisms(complement(lattice(4)));
  REQUIRE(l4.count() == 18);
  REQUIRE(l4.classes.size() == 2);

  // The (3x3) lattice itself: the six twisted reflections, all conjugate.
  auto l3direct = enumerate_delta_automorphisms(lattice(3));
  REQUIRE(l3direct.count() == 6);
  REQUIRE(l3direct.classes.size() == 1);

  // Every representative really is a valid involution for its graph.
  for (const auto& rep : l4.representatives())
    REQUIRE(is_delta_automorphism(complement(lattice(4)), rep));

  // Class sizes add up to the census size.
  size_t total = 0;
  for (const auto& cls : l4.classes) total += cls.size();
  REQUIRE(total == 18);
}

TEST_CASE("census respects its vertex bound") {
  REQUIRE_THROWS_AS(enumerate_delta_automorphisms(complement(lattice(6))), BoundError);
  REQUIRE_THROWS_AS(enumerate_delta_automorphisms(complement(triangular(9))), BoundError);
}

TEST_CASE("i-automorphism censuses match the canonical family") {
  // Each census class of the lattice complement contains exactly one
  // i-automorphism up to conjugacy; check membership by building both ways.
  Graph l4bar = complement(lattice(4));
  auto census = enumerate_delta_automorphisms(l4bar);
  for (int i = 1; i <= 2; ++i) {
    Perm p = i_automorphism(4, i);
    bool found = false;
    for (const auto& a : census.all) found = found || a == p;
    REQUIRE(found);
  }
}
