#pragma once

#include <vector>

#include "imlab/graph.hpp"

namespace imlab {

// Induced-minor (or minor) model: branch_sets[v] is the host vertex set that
// stands for pattern vertex v.
struct BranchModel {
  Graph pattern;
  Graph host;
  std::vector<VertexSet> branch_sets;

  VertexSet vertex_union() const;
};

}  // namespace imlab
