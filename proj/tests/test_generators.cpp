#include "doctest.h"

#include "imlab/canonical.hpp"
#include "imlab/containment.hpp"
#include "imlab/detectors.hpp"
#include "imlab/error.hpp"
#include "imlab/generators.hpp"
#include "imlab/rng.hpp"
#include "oracles.hpp"

using namespace imlab;

TEST_CASE("named families have the right shape") {
  CHECK(complete(5).size() == 10);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK_FALSE(complete_bipartite(3, 4).adjacent(0, 1));
  CHECK(grid(5, 5).order() == 25);
  CHECK(grid(5, 5).size() == 40);
  CHECK(grid(2, 3).adjacent(0, 3));
  CHECK(cycle(7).size() == 7);
  CHECK(path(4).size() == 3);
  CHECK(k23star().order() == 11);
  CHECK(theta(2, 2, 2).order() == 5);
  CHECK(theta(2, 3, 4).order() == 8);
  CHECK(prism(1, 1, 1).order() == 6);
  CHECK(prism(0, 2, 2).order() == 7);
  CHECK(pyramid(1, 2, 2).order() == 6);
}

TEST_CASE("families reject invalid lengths with the rule named") {
  CHECK_THROWS_AS(theta(1, 2, 2), SpecError);
  CHECK_THROWS_AS(prism(0, 0, 2), SpecError);
  CHECK_THROWS_AS(prism(0, 1, 3), SpecError);
  CHECK_THROWS_AS(pyramid(1, 1, 2), SpecError);
  CHECK_THROWS_AS(pyramid(0, 2, 2), SpecError);
  try {
    prism(0, 1, 3);
  } catch (const SpecError& e) {
    CHECK(std::string(e.what()).find("at least two") != std::string::npos);
  }
}

TEST_CASE("generated configurations pass their recognisers") {
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    const int a = rng.range(2, 5), b = rng.range(2, 5), c = rng.range(2, 5);
    CHECK(is_theta(theta(a, b, c)));
    CHECK(oracle::whole_3pc_kind(theta(a, b, c)) == "theta");
    const int p = rng.range(1, 4);
    CHECK(is_prism(prism(p, b - 1, c)));
    CHECK(is_prism(prism(0, b, c)));
    CHECK_FALSE(is_prism(prism(0, b, c), false));
    CHECK(is_pyramid(pyramid(rng.range(1, 3), b, c)));
  }
  CHECK(is_theta(k23star()));
}

TEST_CASE("realize_model always yields a valid model") {
  const std::vector<Graph> patterns{complete_bipartite(3, 3), complete_bipartite(3, 4), k23star(), complete(4),
                                    grid(3, 3)};
  for (std::uint64_t s = 0; s < 60; ++s) {
    const Graph& p = patterns[s % patterns.size()];
    RealizeOptions o;
    o.intra_edge_prob = s % 2 == 0 ? 0.3 : 0.0;
    const auto m = realize_model(p, 1 + static_cast<int>(s % 4), static_cast<int>(s % 3), s, o);
    const auto check = verify_model(m);
    CHECK_MESSAGE(check.ok, check.message);
  }
}

TEST_CASE("realize_model with unit budgets returns the pattern itself") {
  const Graph k34 = complete_bipartite(3, 4);
  const auto m = realize_model(k34, 1, 0, 5);
  CHECK(isomorphic(m.host, k34));
  for (const auto& s : m.branch_sets) CHECK(s.size() == 1);
}

TEST_CASE("realize_model honours a girth floor") {
  RealizeOptions o;
  o.min_girth = 7;
  o.extra_edge_prob = 0.0;
  const auto m = realize_model(complete_bipartite(3, 3), 2, 3, 17, o);
  const auto g = girth(m.host);
  REQUIRE(g.has_value());
  CHECK(*g >= 7);
  CHECK(*g == oracle::girth(m.host));
  o.min_girth = 50;
  o.max_attempts = 5;
  CHECK_THROWS_AS(realize_model(complete(4), 1, 0, 1, o), SpecError);
}

TEST_CASE("random generators are seeded") {
  CHECK(gnp(12, 0.4, 3) == gnp(12, 0.4, 3));
  CHECK_FALSE(gnp(12, 0.4, 3) == gnp(12, 0.4, 4));
  for (std::uint64_t s = 0; s < 20; ++s) CHECK_FALSE(contains_triangle(random_triangle_free(12, 0.7, s)));
}

TEST_CASE("named_graph parses family names") {
  CHECK(named_graph("K5") == complete(5));
  CHECK(named_graph("K3,4") == complete_bipartite(3, 4));
  CHECK(named_graph("K_{3,3}") == complete_bipartite(3, 3));
  CHECK(named_graph("grid5x5") == grid(5, 5));
  CHECK(named_graph("theta2,2,3") == theta(2, 2, 3));
  CHECK(named_graph("claw") == complete_bipartite(1, 3));
  CHECK(named_graph("C6") == cycle(6));
  CHECK(named_graph("k23star") == k23star());
  CHECK_THROWS_AS(named_graph("petersen"), InvalidInput);
}
