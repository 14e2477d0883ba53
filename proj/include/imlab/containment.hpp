#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "imlab/graph.hpp"
#include "imlab/model.hpp"

namespace imlab {

enum class Relation { induced_subgraph, induced_minor, minor };
enum class SearchStatus { found, not_found, indeterminate };

const char* to_string(Relation r);
const char* to_string(SearchStatus s);
Relation parse_relation(const std::string& text);

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;  // decision nodes before giving up
  // Optional per-pattern-vertex fixed branch sets; an empty entry is free.
  std::vector<VertexSet> fixed;
  bool planarity_prefilter = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double elapsed_ms = 0;
};

struct ContainmentReport {
  Relation relation = Relation::induced_minor;
  SearchStatus status = SearchStatus::not_found;
  // Branch sets for the minor relations; singletons for induced subgraphs.
  std::optional<BranchModel> model;
  // Induced subgraph only: mapping[v] is the host image of pattern vertex v.
  std::vector<Vertex> mapping;
  SearchStats stats;

  bool found() const { return status == SearchStatus::found; }
};

// Clause 1: one nonempty set per pattern vertex, valid ids, pairwise disjoint.
// Clause 2: each set connected. Clause 3: sets see each other iff the pattern
// has the edge (minor: at least for every pattern edge).
struct ModelCheck {
  bool ok = true;
  int clause = 0;
  std::string message;
};

ModelCheck verify_model(const BranchModel& m, Relation relation = Relation::induced_minor);

ContainmentReport contains_induced_subgraph(const Graph& host, const Graph& pattern, const SearchOptions& options = {});
ContainmentReport contains_induced_minor(const Graph& host, const Graph& pattern, const SearchOptions& options = {});
ContainmentReport contains_minor(const Graph& host, const Graph& pattern, const SearchOptions& options = {});
ContainmentReport contains(Relation relation, const Graph& host, const Graph& pattern, const SearchOptions& options = {});

struct MinimizeOptions {
  std::uint64_t budget = kDefaultBudget;  // per re-search
  std::vector<bool> frozen;               // pattern vertices whose sets stay untouched
};

struct MinimizeResult {
  BranchModel model;
  bool exact = true;  // false if some re-search hit the budget
  int removed = 0;    // vertices dropped from the union
};

// Drops vertices from the model's union until no single vertex can be removed
// with a model of the pattern surviving in the rest. A vertex is first tried
// with the repair rule (keep a component of the shrunk set that still sees
// every required neighbour set), then by exact re-search.
MinimizeResult minimize_model(const BranchModel& m, const MinimizeOptions& options = {});

// For every non-frozen vertex a of the union, re-searches the pattern inside
// union \ {a}. found = some vertex is removable (not minimal).
SearchStatus find_removable_vertex(const BranchModel& m, const MinimizeOptions& options = {},
                                   Vertex* removable = nullptr);

// Pattern vertices v whose branch set induces a cycle longer than deg(v).
std::vector<Vertex> girth_tree_violations(const BranchModel& m);
bool check_girth_tree_property(const BranchModel& m);

// True if g[s] has a cycle with more than `bound` vertices.
bool has_cycle_longer_than(const Graph& g, const VertexSet& s, int bound);

struct PrivateSets {
  std::map<Vertex, Vertex> privates;  // leaf -> pattern vertex with private contact
  std::vector<Vertex> violations;     // leaves without one
};

// Requires branch_sets[v] to induce a tree (PreconditionError otherwise).
// Singleton sets are exempt and yield an empty result.
PrivateSets private_branch_sets(const BranchModel& m, Vertex v);

}  // namespace imlab
