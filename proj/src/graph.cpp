#include "imlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "imlab/error.hpp"

namespace imlab {

VertexSet make_set(std::vector<Vertex> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : n_(n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Vertex GraphBuilder::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InvalidInput("edge " + std::to_string(u) + "-" + std::to_string(v) +
                       " out of range for " + std::to_string(n_) + " vertices");
  }
  if (u == v) throw InvalidInput("loop at vertex " + std::to_string(u));
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.words_ = static_cast<std::size_t>((n_ + 63) / 64);
  g.adj_ = adj_;
  g.bits_.assign(g.words_ * static_cast<std::size_t>(n_), 0);
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < n_; ++u) {
    auto& row = g.adj_[u];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    degree_sum += row.size();
    for (Vertex v : row) {
      g.bits_[static_cast<std::size_t>(u) * g.words_ + static_cast<std::size_t>(v >> 6)] |=
          std::uint64_t{1} << (v & 63);
    }
  }
  g.m_ = degree_sum / 2;
  return g;
}

void require_vertices(const Graph& g, const VertexSet& s, const char* what) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw InvalidInput(std::string(what) + ": vertex " + std::to_string(v) +
                         " not in graph of order " + std::to_string(g.order()));
    }
  }
}

Restriction induced_subgraph(const Graph& g, const VertexSet& s) {
  require_vertices(g, s, "induced_subgraph");
  Restriction r;
  r.old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
  r.new_to_old.reserve(s.size());
  for (Vertex v : s) {
    if (r.old_to_new[v] != -1) continue;
    r.old_to_new[v] = static_cast<Vertex>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  GraphBuilder b(static_cast<int>(r.new_to_old.size()));
  for (std::size_t i = 0; i < r.new_to_old.size(); ++i) {
    for (Vertex w : g.neighbors(r.new_to_old[i])) {
      Vertex j = r.old_to_new[w];
      if (j > static_cast<Vertex>(i)) b.add_edge(static_cast<Vertex>(i), j);
    }
  }
  r.graph = b.build();
  return r;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!set_contains(s, v)) keep.push_back(v);
  }
  return induced_subgraph(g, keep).graph;
}

Contraction contract_edge_mapped(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) throw InvalidInput("contract_edge: vertex out of range");
  if (u == v || !g.adjacent(u, v)) {
    throw PreconditionError("contract_edge: " + std::to_string(u) + "-" + std::to_string(v) +
                            " is not an edge");
  }
  if (u > v) std::swap(u, v);
  Contraction c;
  c.old_to_new.resize(static_cast<std::size_t>(g.order()));
  Vertex next = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == v) continue;
    c.old_to_new[w] = next++;
  }
  c.old_to_new[v] = c.old_to_new[u];
  GraphBuilder b(g.order() - 1);
  for (auto [x, y] : g.edges()) {
    Vertex a = c.old_to_new[x];
    Vertex z = c.old_to_new[y];
    if (a != z) b.add_edge(a, z);
  }
  c.graph = b.build();
  return c;
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  return contract_edge_mapped(g, u, v).graph;
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  GraphBuilder b(static_cast<int>(es.size()));
  // incident[v] lists indices of edges at v
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < es.size(); ++i) {
    incident[es[i].first].push_back(static_cast<int>(i));
    incident[es[i].second].push_back(static_cast<int>(i));
  }
  for (const auto& at : incident) {
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size(); ++j) b.add_edge(at[i], at[j]);
    }
  }
  return b.build();
}

Graph subdivide(const Graph& g, int times) {
  if (times < 0) throw InvalidInput("subdivide: negative count");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) {
    Vertex prev = u;
    for (int i = 0; i < times; ++i) {
      Vertex w = b.add_vertex();
      b.add_edge(prev, w);
      prev = w;
    }
    b.add_edge(prev, v);
  }
  return b.build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

namespace {

// BFS labelling restricted to vertices with allowed[v] set.
std::vector<VertexSet> components_within(const Graph& g, const std::vector<char>& allowed) {
  std::vector<VertexSet> out;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!allowed[s] || seen[s]) continue;
    queue.assign(1, s);
    seen[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    out.push_back(queue);
  }
  return out;
}

void require_disjoint(const VertexSet& x, const VertexSet& y, const char* what) {
  if (!sets_disjoint(x, y)) throw PreconditionError(std::string(what) + ": sets overlap");
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, std::vector<char>(static_cast<std::size_t>(g.order()), 1));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_connected(const Graph& g, const VertexSet& s) {
  require_vertices(g, s, "is_connected");
  if (s.empty()) return true;
  std::vector<char> allowed(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) allowed[v] = 1;
  std::vector<char> seen(allowed.size(), 0);
  std::vector<Vertex> queue{s.front()};
  seen[s.front()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == s.size();
}

bool vertex_sees(const Graph& g, Vertex v, const VertexSet& s) {
  for (Vertex w : s) {
    if (g.adjacent(v, w)) return true;
  }
  return false;
}

bool sees(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_vertices(g, x, "sees");
  require_vertices(g, y, "sees");
  require_disjoint(x, y, "sees");
  for (Vertex v : x) {
    if (vertex_sees(g, v, y)) return true;
  }
  return false;
}

bool is_anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  return !sees(g, x, y);
}

bool is_complete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  require_vertices(g, x, "is_complete");
  require_vertices(g, y, "is_complete");
  require_disjoint(x, y, "is_complete");
  for (Vertex v : x) {
    for (Vertex w : y) {
      if (!g.adjacent(v, w)) return false;
    }
  }
  return true;
}

VertexSet attachments(const Graph& g, const VertexSet& s, const VertexSet& t) {
  VertexSet out;
  for (Vertex v : s) {
    if (vertex_sees(g, v, t)) out.push_back(v);
  }
  return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (!set_contains(s, w)) out.push_back(w);
    }
  }
  return make_set(std::move(out));
}

bool well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex v = nb[i];
      if (v == u || !g.contains(v)) return false;
      if (i > 0 && nb[i - 1] >= v) return false;
      if (!g.adjacent(v, u) || !g.adjacent(u, v)) return false;
    }
  }
  return degree_sum == 2 * g.size();
}

}  // namespace imlab
