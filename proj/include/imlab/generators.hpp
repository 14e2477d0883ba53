#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imlab/graph.hpp"
#include "imlab/model.hpp"

namespace imlab {

Graph complete(int n);
// Side A is 0..a-1, side B is a..a+b-1.
Graph complete_bipartite(int a, int b);
// Vertex (i, j) is i * cols + j.
Graph grid(int rows, int cols);
Graph cycle(int n);
// Path on n vertices 0-1-...-(n-1).
Graph path(int n);

// Three paths of the given lengths between a = 0 and b = 1; interior vertices
// follow path by path, each listed from the a end.
Graph theta(int l1, int l2, int l3);
// Triangles a1a2a3 = 0,1,2 and b1b2b3 = 3,4,5 joined by paths a_i..b_i. A
// length-0 path identifies a_i with b_i (then only five triangle vertices).
Graph prism(int l1, int l2, int l3);
// Apex 0, triangle b1b2b3 = 1,2,3, paths apex..b_i.
Graph pyramid(int l1, int l2, int l3);
// K_{2,3} with every edge subdivided once: degree-3 vertices 0, 1.
Graph k23star();

Graph gnp(int n, double p, std::uint64_t seed);
// Random maximal-ish triangle-free graph: edges tried in random order with
// probability p, skipped when they would close a triangle.
Graph random_triangle_free(int n, double p, std::uint64_t seed);

struct RealizeOptions {
  double extra_edge_prob = 0.2;  // extra cross edges between pattern-adjacent sets
  double intra_edge_prob = 0.0;  // extra edges inside a branch set (creates cycles)
  int min_subdivision = 0;
  int min_girth = 0;             // reject and resample until the host meets it
  int max_attempts = 1000;
  bool shuffle = true;           // relabel host vertices at random
};

// Random host containing a valid induced-minor model of `pattern`: each branch
// set starts as a random tree on 1..branch_budget vertices, each pattern edge
// is realised by a path with 0..subdivision_budget new vertices split between
// the two sets. Throws SpecError if min_girth cannot be met in max_attempts.
BranchModel realize_model(const Graph& pattern, int branch_budget, int subdivision_budget,
                          std::uint64_t seed, const RealizeOptions& options = {});

inline constexpr int kEnumerationCap = 10;

// One representative per isomorphism class, in canonical form, ordered by
// packed adjacency key. Results are cached per order. Throws InvalidInput
// above kEnumerationCap.
std::vector<Graph> enumerate_connected(int n);
std::vector<Graph> enumerate_graphs(int n);

// Named graphs for the CLI: K<n>, K<a>,<b>, C<n>, P<n>, claw, k23star,
// grid<r>x<c>, theta/prism/pyramid<l1>,<l2>,<l3>, K33, K34. Throws InvalidInput.
Graph named_graph(const std::string& name);

}  // namespace imlab
