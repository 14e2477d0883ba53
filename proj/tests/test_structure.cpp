#include "doctest.h"

#include <algorithm>

#include "imlab/error.hpp"
#include "imlab/generators.hpp"
#include "imlab/rng.hpp"
#include "imlab/structure.hpp"
#include "oracles.hpp"

using namespace imlab;

namespace {

// Vertices 0, 1, 2 are x, y, z.
const Triple kXYZ{VertexSet{0}, VertexSet{1}, VertexSet{2}};

bool subset_oracle_minimal(const Graph& g, const VertexSet& a, const Triple& t) {
  const int k = static_cast<int>(a.size());
  for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1u) vs.push_back(a[i]);
    }
    if (!oracle::connected(g, vs)) continue;
    bool all = true;
    for (const auto& s : t) {
      bool hit = false;
      for (int v : vs) {
        for (int w : s) hit = hit || g.adjacent(v, w);
      }
      all = all && hit;
    }
    if (all) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("single vertex seeing everything is a path centred at all three") {
  const Graph g = Graph::from_edges(4, {{3, 0}, {3, 1}, {3, 2}});
  const auto w = classify_type(g, {3}, kXYZ);
  CHECK(w.kind == SeesKind::path);
  CHECK(w.centers == std::vector<int>{0, 1, 2});
  CHECK(path_type_centers(g, {3}, kXYZ).centers == std::vector<int>{0, 1, 2});
}

TEST_CASE("a subdivided star is a claw") {
  // Apex 3, legs 3-4-0, 3-5-1, 3-6-2.
  const Graph g = Graph::from_edges(7, {{3, 4}, {3, 5}, {3, 6}, {4, 0}, {5, 1}, {6, 2}});
  const VertexSet a{3, 4, 5, 6};
  const auto w = classify_type(g, a, kXYZ);
  CHECK(w.kind == SeesKind::claw);
  CHECK(w.apex == 3);
  CHECK(check_sees_type(g, a, kXYZ, w).empty());
  CHECK(path_type_centers(g, a, kXYZ).centers.empty());
  CHECK(is_minimal_seer(g, a, kXYZ));
}

TEST_CASE("a triangle with one attachment per corner") {
  const Graph g = Graph::from_edges(6, {{3, 4}, {4, 5}, {3, 5}, {3, 0}, {4, 1}, {5, 2}});
  const VertexSet a{3, 4, 5};
  const auto w = classify_type(g, a, kXYZ);
  CHECK(w.kind == SeesKind::triangle);
  CHECK(check_sees_type(g, a, kXYZ, w).empty());
  CHECK(path_type_centers(g, a, kXYZ).centers.empty());
}

TEST_CASE("a claw with its apex at a leg end must report the path overlap") {
  // a = 3 sees X, b = 4 sees Y, d = 5 sees Z, a is adjacent to b and d.
  const Graph g = Graph::from_edges(6, {{3, 0}, {3, 4}, {3, 5}, {4, 1}, {5, 2}});
  const VertexSet a{3, 4, 5};
  SeesTypeWitness w;
  w.kind = SeesKind::claw;
  w.apex = 3;
  w.legs = {std::vector<Vertex>{3}, std::vector<Vertex>{3, 4}, std::vector<Vertex>{3, 5}};
  CHECK_FALSE(check_sees_type(g, a, kXYZ, w).empty());
  w.path = {4, 3, 5};
  w.centers = {0};
  CHECK(check_sees_type(g, a, kXYZ, w).empty());
  const auto c = classify_type(g, a, kXYZ);
  CHECK(check_sees_type(g, a, kXYZ, c).empty());
  CHECK(path_type_centers(g, a, kXYZ).centers == std::vector<int>{0});
}

TEST_CASE("failed hypotheses raise precondition errors") {
  const Graph g = Graph::from_edges(6, {{3, 0}, {3, 1}, {5, 2}});
  CHECK_THROWS_AS(classify_type(g, {3}, kXYZ), PreconditionError);
  CHECK_THROWS_AS(classify_type(g, {3, 5}, kXYZ), PreconditionError);
  CHECK_THROWS_AS(classify_type(g, {0, 3}, kXYZ), PreconditionError);
  const Graph k = Graph::from_edges(5, {{3, 0}, {3, 1}, {3, 2}, {4, 0}, {4, 1}, {4, 2}, {3, 4}});
  CHECK_THROWS_AS(check_one_path(k, {3}, {4}, kXYZ), PreconditionError);
  try {
    check_one_path(k, {3}, {4}, kXYZ);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("anticomplete") != std::string::npos);
  }
}

TEST_CASE("path-type centres on a long path") {
  // x - 3 - 4 - 5 - 6 - z, y attached to 5.
  const Graph g = Graph::from_edges(7, {{0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 2}, {5, 1}});
  const VertexSet a{3, 4, 5, 6};
  CHECK(path_type_centers(g, a, kXYZ).centers == std::vector<int>{1});
  CHECK(path_centers(g, {3, 4, 5, 6}, kXYZ) == std::vector<int>{1});
  CHECK(path_centers(g, {6, 5, 4, 3}, kXYZ) == std::vector<int>{1});
  CHECK(path_centers(g, {3, 5}, kXYZ).empty());
  const auto w = classify_type(g, a, kXYZ);
  CHECK(w.kind == SeesKind::path);
  CHECK(w.centers == std::vector<int>{1});
}

TEST_CASE("minimal seers agree with the subset oracle") {
  Rng rng(31);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = rng.range(6, 11);
    const Graph g = gnp(n, 0.35, rng.next());
    VertexSet a;
    for (int v = 3; v < n; ++v) {
      if (rng.chance(0.7)) a.push_back(v);
    }
    if (a.empty() || !is_connected(g, a)) continue;
    if (!sees(g, a, kXYZ[0]) || !sees(g, a, kXYZ[1]) || !sees(g, a, kXYZ[2])) continue;
    ++checked;
    CHECK(is_minimal_seer(g, a, kXYZ) == subset_oracle_minimal(g, a, kXYZ));
  }
  CHECK(checked > 50);
}

TEST_CASE("classification certificates are valid on random connected sets") {
  Rng rng(32);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = rng.range(6, 12);
    const Graph g = gnp(n, 0.3, rng.next());
    VertexSet a;
    for (int v = 3; v < n; ++v) a.push_back(v);
    if (!is_connected(g, a)) continue;
    if (!sees(g, a, kXYZ[0]) || !sees(g, a, kXYZ[1]) || !sees(g, a, kXYZ[2])) continue;
    ++checked;
    const auto w = classify_type(g, a, kXYZ);
    CHECK(check_sees_type(g, a, kXYZ, w).empty());
    const auto tau = path_type_centers(g, a, kXYZ);
    REQUIRE(tau.status == SearchStatus::found);
    if (w.kind == SeesKind::path) {
      CHECK_FALSE(w.centers.empty());
      CHECK(std::includes(tau.centers.begin(), tau.centers.end(), w.centers.begin(), w.centers.end()));
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("a host with a 3PC gets no guarantee") {
  // Three singletons each adjacent to x, y, z: the union is K3,3.
  GraphBuilder b(6);
  for (int s = 3; s < 6; ++s) {
    for (int t = 0; t < 3; ++t) b.add_edge(s, t);
  }
  const Graph g = b.build();
  const auto f = establish_freeness(g, {0, 1, 2, 3, 4, 5}, FreenessMode::verify);
  CHECK(f.status == FreenessStatus::has_3pc);
  REQUIRE(f.witness);
  CHECK(verify_3pc(g, *f.witness));
  const auto one = check_one_path(g, {3}, {4}, kXYZ);
  CHECK(one.host.status == FreenessStatus::has_3pc);
  CHECK_FALSE(one.violation);
  const auto sk = extract_k33_skeleton(g, {VertexSet{3}, VertexSet{4}, VertexSet{5}}, kXYZ);
  CHECK(sk.status == SkeletonStatus::no_guarantee);
  CHECK(establish_freeness(g, {0, 1, 2}, FreenessMode::verify).status == FreenessStatus::verified_free);
  CHECK(establish_freeness(g, {0}, FreenessMode::assume).status == FreenessStatus::assumed);
}

TEST_CASE("planted skeletons are recovered exactly") {
  for (std::uint64_t s = 0; s < 15; ++s) {
    const auto p = plant_k33_skeleton(s, s % 2 == 0);
    CHECK(check_skeleton(p.graph, p.abc, p.xyz, p.expected).empty());
    const auto r = extract_k33_skeleton(p.graph, p.abc, p.xyz);
    REQUIRE(r.status == SkeletonStatus::extracted);
    CHECK(r.host.status == FreenessStatus::verified_free);
    CHECK(r.small_sets == 1);
    const auto& k = *r.skeleton;
    CHECK(check_skeleton(p.graph, p.abc, p.xyz, k).empty());
    CHECK(k.a_path == p.expected.a_path);
    CHECK(k.p_path == p.expected.p_path);
    CHECK(k.hole == p.expected.hole);
    CHECK(k.abc_role == p.expected.abc_role);
    CHECK(k.xyz_role == p.expected.xyz_role);
  }
}

TEST_CASE("mutated skeletons fail their bullets") {
  const auto p = plant_k33_skeleton(3, false);
  auto bad = p.expected;
  bad.a_path.pop_back();
  CHECK_FALSE(check_skeleton(p.graph, p.abc, p.xyz, bad).empty());
  bad = p.expected;
  std::reverse(bad.hole.begin(), bad.hole.end());
  bad.hole.push_back(bad.hole.front());
  CHECK_FALSE(check_skeleton(p.graph, p.abc, p.xyz, bad).empty());
  bad = p.expected;
  bad.abc_role = {0, 0, 1};
  CHECK(check_skeleton(p.graph, p.abc, p.xyz, bad) == std::vector<std::string>{"roles are not permutations"});
}

TEST_CASE("mode names round trip") {
  CHECK(parse_freeness_mode("assume") == FreenessMode::assume);
  CHECK(std::string(to_string(parse_freeness_mode("verify"))) == "verify");
  CHECK_THROWS_AS(parse_freeness_mode("maybe"), InvalidInput);
}
