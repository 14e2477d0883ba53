#include "doctest.h"

#include <set>

#include "imlab/bits.hpp"
#include "imlab/canonical.hpp"
#include "imlab/error.hpp"
#include "imlab/generators.hpp"
#include "imlab/graph.hpp"
#include "imlab/io.hpp"
#include "imlab/rng.hpp"
#include "oracles.hpp"

using namespace imlab;

TEST_CASE("builder sorts, dedups and rejects loops") {
  GraphBuilder b(4);
  b.add_edge(2, 0);
  b.add_edge(0, 2);
  b.add_edge(3, 1);
  CHECK_THROWS_AS(b.add_edge(1, 1), InvalidInput);
  CHECK_THROWS_AS(b.add_edge(0, 4), InvalidInput);
  const Graph g = b.build();
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(well_formed(g));
}

TEST_CASE("vertex set helpers") {
  CHECK(make_set({3, 1, 3, 2}) == VertexSet{1, 2, 3});
  CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
  CHECK(set_difference({1, 2, 3}, {2}) == VertexSet{1, 3});
  CHECK(sets_disjoint({1, 2}, {3}));
  CHECK_FALSE(sets_disjoint({1, 2}, {2}));

  const Graph p = path(5);
  CHECK(sees(p, {0, 1}, {2, 3}));
  CHECK(is_anticomplete(p, {0}, {2, 3}));
  CHECK(is_complete(complete(4), {0, 1}, {2, 3}));
  CHECK_THROWS_AS(sees(p, {0, 1}, {1, 2}), PreconditionError);
  CHECK(attachments(p, {1, 2}, {3}) == VertexSet{2});
  CHECK(neighborhood(p, {2}) == VertexSet{1, 3});
  CHECK(is_connected(p, {1, 2, 3}));
  CHECK_FALSE(is_connected(p, {1, 3}));
}

TEST_CASE("induced subgraph, deletion and contraction") {
  const Graph c = cycle(6);
  const auto r = induced_subgraph(c, {0, 1, 2, 4});
  CHECK(r.graph.order() == 4);
  CHECK(r.graph.size() == 2);
  CHECK(r.new_to_old == std::vector<Vertex>{0, 1, 2, 4});
  CHECK(r.old_to_new[3] == -1);
  CHECK(delete_vertices(c, {0}).size() == 4);

  const auto k = contract_edge_mapped(c, 0, 1);
  CHECK(k.graph.order() == 5);
  CHECK(isomorphic(k.graph, cycle(5)));
  CHECK(k.old_to_new[0] == k.old_to_new[1]);
  CHECK_THROWS(contract_edge(c, 0, 2));
}

TEST_CASE("line graph of a theta is a prism") {
  const Graph l = line_graph(theta(2, 2, 3));
  CHECK(oracle::whole_3pc_kind(l) == "prism");
  CHECK(line_graph(complete(3)).size() == 3);
}

TEST_CASE("subdivide and complement") {
  const Graph s = subdivide(complete_bipartite(2, 3), 1);
  CHECK(s.order() == 11);
  CHECK(s.size() == 12);
  CHECK(isomorphic(s, k23star()));
  CHECK(complement(complete(5)).size() == 0);
  CHECK(isomorphic(complement(cycle(5)), cycle(5)));
  CHECK(connected_components(Graph::from_edges(5, {{0, 1}, {3, 4}})).size() == 3);
}

TEST_CASE("graph6 matches the bitwise encoder and round trips") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.range(0, 70);
    const Graph g = gnp(n, rng.uniform(), rng.next());
    const auto text = emit_graph6(g);
    CHECK(text == oracle::graph6(g));
    CHECK(parse_graph6(text) == g);
  }
  CHECK(emit_graph6(complete(4)) == "C~");
  CHECK(parse_graph6(">>graph6<<C~\n") == complete(4));
}

TEST_CASE("graph6 errors carry byte offsets") {
  try {
    parse_graph6("C~~");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
}

TEST_CASE("edge lists") {
  const Graph g = cycle(5);
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK(parse_edge_list("# comment\nn 3\n0 1\n\n1 2\n1 2\n") == path(3));
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 5\n"), ParseError);
  const auto many = parse_graphs("C~\nBg\n");
  REQUIRE(many.size() == 2);
  CHECK(many[1] == path(3));
}

TEST_CASE("canonical form agrees with the permutation oracle") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const int n = rng.range(1, 7);
    const Graph a = gnp(n, rng.uniform(), rng.next());
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) perm[v] = v;
    rng.shuffle(perm);
    const Graph b = relabel(a, perm);
    CHECK(canonical_graph6(a) == canonical_graph6(b));
    const Graph c = gnp(n, rng.uniform(), rng.next());
    CHECK((canonical_graph6(a) == canonical_graph6(c)) ==
          (oracle::canonical_string(a) == oracle::canonical_string(c)));
    const auto cf = canonical_form(a);
    CHECK(relabel(a, cf.position) == cf.graph);
  }
}

TEST_CASE("canonical form on symmetric graphs") {
  for (const Graph& g : {complete(8), complete_bipartite(4, 5), grid(4, 4), cycle(12), k23star(),
                         subdivide(complete(5), 1)}) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) perm[v] = g.order() - 1 - v;
    CHECK(canonical_graph6(relabel(g, perm)) == canonical_graph6(g));
  }
  CHECK_FALSE(isomorphic(cycle(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("pack_small round trips") {
  const Graph g = grid(3, 3);
  CHECK(unpack_small(pack_small(g)) == g);
  CHECK_THROWS(pack_small(complete(12)));
}

TEST_CASE("connected census matches brute-force dedup") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      GraphBuilder b(n);
      int bit = 0;
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
          if (mask >> bit & 1u) b.add_edge(u, v);
        }
      }
      const Graph g = b.build();
      if (is_connected(g)) classes.insert(oracle::canonical_string(g));
    }
    CHECK(classes.size() == expected[n - 1]);
    CHECK(enumerate_connected(n).size() == expected[n - 1]);
  }
  CHECK(enumerate_connected(7).size() == 853);
  CHECK(enumerate_graphs(7).size() == 1044);
  CHECK_THROWS_AS(enumerate_connected(11), InvalidInput);
}

TEST_CASE("rng streams are reproducible and bounded") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  const Rng root(7);
  CHECK(root.split(1).next() == root.split(1).next());
  CHECK(root.split(1).next() != root.split(2).next());
  Rng r(3);
  for (int i = 0; i < 1000; ++i) {
    const int x = r.range(-2, 4);
    CHECK(x >= -2);
    CHECK(x <= 4);
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("bitset helpers") {
  Bits<2> s;
  s.set(3);
  s.set(70);
  s.set(100);
  CHECK(s.count() == 3);
  CHECK(s.first() == 3);
  CHECK(s.next(3) == 70);
  Bits<2> t = s;
  t.keep_above(3);
  CHECK(t.first() == 70);
  t = s;
  t.keep_below(100);
  CHECK(t.count() == 2);
  CHECK(Bits<2>::prefix(65).count() == 65);
}
