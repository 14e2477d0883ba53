#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "imlab/containment.hpp"
#include "imlab/graph.hpp"

namespace imlab {

enum class ConfigKind { theta, prism, pyramid };
const char* to_string(ConfigKind k);

// Three paths of a theta, prism or pyramid.
//   theta:   each path runs a..b (same a, b).
//   prism:   path i runs a_i..b_i; {a_i} and {b_i} are the triangles. A
//            single-vertex path is the length-0 case (a_i = b_i).
//   pyramid: path i runs apex..b_i; {b_i} is the triangle.
struct ThreePCWitness {
  ConfigKind kind = ConfigKind::theta;
  std::array<std::vector<Vertex>, 3> paths;

  // theta {a, b}; prism {a1, a2, a3, b1, b2, b3}; pyramid {apex, b1, b2, b3}.
  std::vector<Vertex> ends() const;
  VertexSet vertices() const;
  std::array<int, 3> lengths() const;
};

// Empty string if w is an induced configuration of its kind in g, otherwise
// the first violated condition.
std::string check_3pc(const Graph& g, const ThreePCWitness& w, bool allow_prism_zero = true);
inline bool verify_3pc(const Graph& g, const ThreePCWitness& w, bool allow_prism_zero = true) {
  return check_3pc(g, w, allow_prism_zero).empty();
}
// Every two of the three paths together induce a hole.
bool pairwise_holes(const Graph& g, const ThreePCWitness& w);

// True if `cycle` (vertex sequence, closing edge implied) is a hole of g.
bool is_hole(const Graph& g, const std::vector<Vertex>& cycle);

// Whole-graph recognisers: g itself is the configuration.
std::optional<ThreePCWitness> is_theta(const Graph& g);
std::optional<ThreePCWitness> is_prism(const Graph& g, bool allow_zero = true);
std::optional<ThreePCWitness> is_pyramid(const Graph& g);
// Tries theta, then prism, then pyramid; also checks the pairwise-hole
// characterisation of the result (throws std::logic_error on disagreement).
std::optional<ThreePCWitness> is_3pc(const Graph& g, bool allow_prism_zero = true);
// Every kind g is recognised as (usually zero or one).
std::vector<ConfigKind> recognized_kinds(const Graph& g, bool allow_prism_zero = true);

struct DetectOptions {
  std::uint64_t budget = kDefaultBudget;
  bool allow_prism_zero = true;
};

struct DetectResult {
  SearchStatus status = SearchStatus::not_found;
  std::optional<ThreePCWitness> witness;
  std::uint64_t nodes = 0;

  bool found() const { return status == SearchStatus::found; }
};

// Induced-subgraph searches. Witnesses are re-verified before return.
DetectResult contains_theta(const Graph& g, const DetectOptions& options = {});
DetectResult contains_prism(const Graph& g, const DetectOptions& options = {});
DetectResult contains_pyramid(const Graph& g, const DetectOptions& options = {});
DetectResult contains_3pc(const Graph& g, const DetectOptions& options = {});

// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const Graph& g);
// Lexicographically first triangle.
std::optional<std::array<Vertex, 3>> contains_triangle(const Graph& g);

// Calls f on every hole (each once, starting at its smallest vertex). f
// returns false to stop. Returns false if stopped or out of budget.
bool for_each_hole(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& f,
                   std::uint64_t budget = kDefaultBudget, std::uint64_t* nodes = nullptr);

struct HoleResult {
  SearchStatus status = SearchStatus::not_found;
  std::vector<Vertex> hole;
};
HoleResult contains_even_hole(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct Wheel {
  Vertex center = -1;
  std::vector<Vertex> rim;
  int spokes = 0;
};
// A hole plus a vertex with at least three neighbours on it.
std::vector<Wheel> find_wheels(const Graph& g);
bool is_even_wheel(const Graph& g, Vertex center, const std::vector<Vertex>& rim);
std::optional<Wheel> contains_even_wheel(const Graph& g);

}  // namespace imlab
