#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace imlab {

using Vertex = int;

// Sorted, duplicate-free list of vertex ids. Range checks happen at use sites.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

// Sorts and deduplicates in place.
VertexSet make_set(std::vector<Vertex> members);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, Vertex v);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);

// Simple undirected graph on vertices 0..n-1. Immutable once built; use
// GraphBuilder (or the from_edges factory) to construct one.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput on out-of-range ids or loops. Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto bit = static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6);
    return (bits_[bit] >> (v & 63)) & 1U;
  }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Row-major adjacency bitmap, `words_per_row()` 64-bit words per vertex.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const noexcept { return n_; }
  Vertex add_vertex();
  // Throws InvalidInput on loops or bad ids; repeated edges are ignored.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  Graph build() const;

 private:
  int n_;
  std::vector<std::vector<Vertex>> adj_;
};

// Induced subgraph on `s`. `old_to_new[v]` is the new id of v or -1; the new
// ids follow the order of `s`.
struct Restriction {
  Graph graph;
  std::vector<Vertex> old_to_new;
  std::vector<Vertex> new_to_old;
};

Restriction induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertices(const Graph& g, const VertexSet& s);

// Contracts uv into a single vertex. Surviving vertices are relabelled
// densely; the merged vertex takes min(u, v)'s slot before compaction.
struct Contraction {
  Graph graph;
  std::vector<Vertex> old_to_new;
};
Contraction contract_edge_mapped(const Graph& g, Vertex u, Vertex v);
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

// Vertex i of the result is edge i of g.edges().
Graph line_graph(const Graph& g);

// Every edge becomes a path with `times` internal vertices. New vertices are
// appended after the originals, edge by edge in g.edges() order.
Graph subdivide(const Graph& g, int times);

Graph complement(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, const VertexSet& s);

// Set relations between disjoint vertex sets. Overlap throws PreconditionError.
bool sees(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_complete(const Graph& g, const VertexSet& x, const VertexSet& y);

// Vertex v sees set s.
bool vertex_sees(const Graph& g, Vertex v, const VertexSet& s);
// Vertices of `s` adjacent to at least one vertex of `t`.
VertexSet attachments(const Graph& g, const VertexSet& s, const VertexSet& t);

// Open neighbourhood of a set.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

// Checks the structural invariants (symmetry, no loops, sorted lists).
bool well_formed(const Graph& g);

// Throws InvalidInput unless every member is a vertex of g.
void require_vertices(const Graph& g, const VertexSet& s, const char* what);

}  // namespace imlab
