#pragma once

// Slow reference implementations for tests. They only use Graph::order,
// Graph::adjacent and Graph::degree, never the library's search code.

#include <cstdint>
#include <string>
#include <vector>

#include "imlab/graph.hpp"

namespace oracle {

using imlab::Graph;

// Labels every host vertex with a pattern vertex or "unused" and checks the
// model conditions directly. Induced mode prunes as soon as two labelled
// vertices of non-adjacent pattern vertices touch.
bool induced_minor(const Graph& host, const Graph& pattern);
bool minor(const Graph& host, const Graph& pattern);

// Some vertex subset induces a theta: two non-adjacent degree-3 vertices,
// the rest degree 2, removing the two leaves three pieces that each touch
// both.
bool has_theta(const Graph& g);
bool has_even_hole(const Graph& g);

// Degree description of the whole graph as a theta, pyramid or prism
// (allowing the length-0 prism). Returns "theta", "pyramid", "prism" or "".
std::string whole_3pc_kind(const Graph& g);

// Shortest cycle by enumerating simple cycles; 0 for forests.
int girth(const Graph& g);

// Lexicographically largest adjacency string over all vertex orders.
std::string canonical_string(const Graph& g);

// graph6 written bit by bit from the format description.
std::string graph6(const Graph& g);

// Connected vertex subset test by flood fill.
bool connected(const Graph& g, const std::vector<int>& vs);

}  // namespace oracle
