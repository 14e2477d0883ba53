#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imlab/graph.hpp"

namespace imlab {

// Canonical relabelling by equitable-partition refinement, individualisation
// and automorphism (orbit) pruning. Meant for the small graphs used in
// enumeration and tests; cost grows quickly past a few dozen vertices.
struct CanonicalForm {
  std::vector<Vertex> position;  // position[v] = canonical id of v
  Graph graph;                   // g relabelled by `position`
};

CanonicalForm canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Relabels g so that vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

// Packs the upper triangle of g (order <= 11) into 64 bits, order in the top
// bits. Used as a compact dedup key for already-canonical graphs.
std::uint64_t pack_small(const Graph& g);
Graph unpack_small(std::uint64_t key);

}  // namespace imlab
