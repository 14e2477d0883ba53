#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imlab/containment.hpp"
#include "imlab/detectors.hpp"
#include "imlab/graph.hpp"

namespace imlab {

// Three disjoint target sets; index 0, 1, 2 stands for X, Y, Z.
using Triple = std::array<VertexSet, 3>;

enum class SeesKind { path, claw, triangle };
const char* to_string(SeesKind k);

struct SeesTypeWitness {
  SeesKind kind = SeesKind::path;
  // Path type: the defining path. For a claw whose apex is also a leg end it
  // holds the overlapping path-type certificate.
  std::vector<Vertex> path;
  std::vector<int> centers;  // indices into the triple certified by `path`
  Vertex apex = -1;
  // claw: legs a..x, a..y, a..z.  triangle: x..x', y..y', z..z' where x, y, z
  // form the triangle and x', y', z' see X, Y, Z.
  std::array<std::vector<Vertex>, 3> legs;
};

// Centres certified by `path` (either orientation), as indices into t.
std::vector<int> path_centers(const Graph& g, const std::vector<Vertex>& path, const Triple& t);

// Empty if w is a valid certificate for A against t, else the failed check.
std::string check_sees_type(const Graph& g, const VertexSet& a, const Triple& t, const SeesTypeWitness& w);

// Follows the constructive argument: shortest X-to-Z path, then a shortest
// connection from the Y side, shrinking the pair until one of the three
// types appears. Throws PreconditionError naming the failed hypothesis.
SeesTypeWitness classify_type(const Graph& g, const VertexSet& a, const Triple& t);

struct CentersResult {
  std::vector<int> centers;
  SearchStatus status = SearchStatus::found;  // indeterminate if out of budget
};
// Exhaustive search over chordless paths in g[A].
CentersResult path_type_centers(const Graph& g, const VertexSet& a, const Triple& t,
                                std::uint64_t budget = kDefaultBudget);

enum class FreenessMode { assume, verify, skip };
enum class FreenessStatus { assumed, verified_free, has_3pc, unknown, skipped };
const char* to_string(FreenessMode m);
const char* to_string(FreenessStatus s);
FreenessMode parse_freeness_mode(const std::string& text);

struct Freeness {
  FreenessStatus status = FreenessStatus::skipped;
  std::optional<ThreePCWitness> witness;  // in host ids, when has_3pc
};
// Lemma guarantees only need the sets themselves to be 3PC-free, so
// verification looks at the subgraph induced by their union.
Freeness establish_freeness(const Graph& g, const VertexSet& support, FreenessMode mode,
                            std::uint64_t budget = kDefaultBudget);
inline bool guarantee_applies(FreenessStatus s) {
  return s == FreenessStatus::assumed || s == FreenessStatus::verified_free;
}

struct OnePathVerdict {
  std::vector<int> tau_a;
  std::vector<int> tau_b;
  bool both_path = false;
  bool violation = false;  // not both path while the guarantee applies
  Freeness host;
};
OnePathVerdict check_one_path(const Graph& g, const VertexSet& a, const VertexSet& b, const Triple& t,
                              FreenessMode mode = FreenessMode::verify);

struct AllPathVerdict {
  std::vector<std::vector<int>> taus;
  std::vector<int> common;
  bool all_path = false;
  bool linear_order = false;
  bool violation = false;
  Freeness host;
};
AllPathVerdict check_all_path_common_center(const Graph& g, const std::vector<VertexSet>& sets, const Triple& t,
                                            FreenessMode mode = FreenessMode::verify);

// Exact: no connected proper subset of `a` sees all three sets. Uses the fact
// that such a subset exists iff some component of a \ {v} sees all three.
bool is_minimal_seer(const Graph& g, const VertexSet& a, const Triple& t);

struct K33Skeleton {
  // A', B', C' (each equal to one input set), P, Q, R (inside X', Y', Z').
  std::vector<Vertex> a_path, b_path, c_path, p_path, q_path, r_path;
  std::array<int, 3> abc_role{};  // abc_role[0] = index of A' among the inputs A, B, C
  std::array<int, 3> xyz_role{};  // xyz_role[0] = index of X' (holding P) among X, Y, Z
  std::vector<Vertex> hole;       // a A' a' r R r' c' C' c p' P p
};

// One message per failed bullet; empty when all seven hold.
std::vector<std::string> check_skeleton(const Graph& g, const Triple& abc, const Triple& xyz, const K33Skeleton& s);

enum class SkeletonStatus { extracted, violation, no_guarantee };
const char* to_string(SkeletonStatus s);

struct SkeletonResult {
  SkeletonStatus status = SkeletonStatus::violation;
  std::optional<K33Skeleton> skeleton;
  std::vector<std::string> failures;
  Freeness host;
  // Number of the three inputs with at most two vertices (1 on success).
  int small_sets = 0;
};
SkeletonResult extract_k33_skeleton(const Graph& g, const Triple& abc, const Triple& xyz,
                                    FreenessMode mode = FreenessMode::verify);

// Builds an instance of the converse construction: a hole A' R C' P with
// B' and Q attached as in the skeleton bullets, optional pendant vertices in
// the X/Y/Z sets, role names shuffled. Resamples until the host is 3PC-free.
struct PlantedSkeleton {
  Graph graph;
  Triple abc;
  Triple xyz;
  K33Skeleton expected;
  int rejected = 0;
};
PlantedSkeleton plant_k33_skeleton(std::uint64_t seed, bool pendants = true);

}  // namespace imlab
