#include "imlab/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <optional>

#include "imlab/canonical.hpp"
#include "imlab/detectors.hpp"
#include "imlab/error.hpp"
#include "imlab/rng.hpp"

namespace imlab {

VertexSet BranchModel::vertex_union() const {
  VertexSet out;
  for (const auto& s : branch_sets) out.insert(out.end(), s.begin(), s.end());
  return make_set(std::move(out));
}

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw SpecError("complete_bipartite: side sizes must be nonnegative");
  GraphBuilder g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g.build();
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw SpecError("grid: both dimensions must be at least 1");
  GraphBuilder b(rows * cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (i + 1 < rows) b.add_edge(i * cols + j, (i + 1) * cols + j);
      if (j + 1 < cols) b.add_edge(i * cols + j, i * cols + j + 1);
    }
  }
  return b.build();
}

Graph cycle(int n) {
  if (n < 3) throw SpecError("cycle: needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

Graph path(int n) {
  if (n < 1) throw SpecError("path: needs at least 1 vertex");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

namespace {

// Joins `from` to `to` by a path of the given length using fresh vertices.
void join(GraphBuilder& b, Vertex from, Vertex to, int length) {
  Vertex prev = from;
  for (int i = 1; i < length; ++i) {
    Vertex w = b.add_vertex();
    b.add_edge(prev, w);
    prev = w;
  }
  b.add_edge(prev, to);
}

std::string lengths_text(int l1, int l2, int l3) {
  return "(" + std::to_string(l1) + ", " + std::to_string(l2) + ", " + std::to_string(l3) + ")";
}

}  // namespace

Graph theta(int l1, int l2, int l3) {
  const std::array<int, 3> len{l1, l2, l3};
  for (int i = 0; i < 3; ++i) {
    if (len[i] < 2) {
      throw SpecError("theta " + lengths_text(l1, l2, l3) + ": each path must have length at least two (path " +
                      std::to_string(i + 1) + ")");
    }
  }
  GraphBuilder b(2);
  for (int l : len) join(b, 0, 1, l);
  return b.build();
}

Graph prism(int l1, int l2, int l3) {
  const std::array<int, 3> len{l1, l2, l3};
  const int zeros = static_cast<int>(std::count(len.begin(), len.end(), 0));
  if (std::any_of(len.begin(), len.end(), [](int l) { return l < 0; })) {
    throw SpecError("prism " + lengths_text(l1, l2, l3) + ": lengths must be nonnegative");
  }
  if (zeros > 1) {
    throw SpecError("prism " + lengths_text(l1, l2, l3) + ": at most one path may have length zero");
  }
  if (zeros == 1 && std::any_of(len.begin(), len.end(), [](int l) { return l == 1; })) {
    throw SpecError("prism " + lengths_text(l1, l2, l3) +
                    ": with a length-zero path the other two must have length at least two");
  }
  GraphBuilder b(3);
  std::array<Vertex, 3> a{0, 1, 2};
  std::array<Vertex, 3> t{};
  for (int i = 0; i < 3; ++i) t[i] = len[i] == 0 ? a[i] : b.add_vertex();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      b.add_edge(a[i], a[j]);
      b.add_edge(t[i], t[j]);
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (len[i] > 0) join(b, a[i], t[i], len[i]);
  }
  return b.build();
}

Graph pyramid(int l1, int l2, int l3) {
  const std::array<int, 3> len{l1, l2, l3};
  if (std::any_of(len.begin(), len.end(), [](int l) { return l < 1; })) {
    throw SpecError("pyramid " + lengths_text(l1, l2, l3) + ": each path must have length at least one");
  }
  if (std::count_if(len.begin(), len.end(), [](int l) { return l >= 2; }) < 2) {
    throw SpecError("pyramid " + lengths_text(l1, l2, l3) + ": two of the paths must have length at least two");
  }
  GraphBuilder b(4);
  b.add_edge(1, 2);
  b.add_edge(2, 3);
  b.add_edge(1, 3);
  for (int i = 0; i < 3; ++i) join(b, 0, i + 1, len[i]);
  return b.build();
}

Graph k23star() { return subdivide(complete_bipartite(2, 3), 1); }

Graph gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph random_triangle_free(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  rng.shuffle(pairs);
  std::vector<char> adj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [&](Vertex u, Vertex v) -> char& { return adj[static_cast<std::size_t>(u) * n + v]; };
  GraphBuilder b(n);
  for (auto [u, v] : pairs) {
    if (!rng.chance(p)) continue;
    bool closes = false;
    for (Vertex w = 0; w < n && !closes; ++w) closes = at(u, w) && at(v, w);
    if (closes) continue;
    at(u, v) = at(v, u) = 1;
    b.add_edge(u, v);
  }
  return b.build();
}

BranchModel realize_model(const Graph& pattern, int branch_budget, int subdivision_budget, std::uint64_t seed,
                          const RealizeOptions& options) {
  if (branch_budget < 1) throw InvalidInput("realize_model: branch budget must be at least 1");
  if (subdivision_budget < options.min_subdivision || options.min_subdivision < 0) {
    throw InvalidInput("realize_model: subdivision budget below min_subdivision");
  }
  const int k = pattern.order();
  const Rng root(seed);
  for (int attempt = 0; attempt < std::max(1, options.max_attempts); ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    GraphBuilder b(0);
    std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(k));
    for (Vertex v = 0; v < k; ++v) {
      const int size = rng.range(1, branch_budget);
      for (int i = 0; i < size; ++i) {
        Vertex w = b.add_vertex();
        if (i > 0) b.add_edge(w, sets[v][rng.below(static_cast<std::uint64_t>(i))]);
        sets[v].push_back(w);
      }
    }
    for (auto [u, v] : pattern.edges()) {
      const int s = rng.range(options.min_subdivision, subdivision_budget);
      Vertex x = sets[u][rng.below(sets[u].size())];
      Vertex y = sets[v][rng.below(sets[v].size())];
      const int split = rng.range(0, s);
      Vertex prev = x;
      for (int i = 0; i < s; ++i) {
        Vertex w = b.add_vertex();
        b.add_edge(prev, w);
        sets[i < split ? u : v].push_back(w);
        prev = w;
      }
      b.add_edge(prev, y);
    }
    if (options.extra_edge_prob > 0) {
      for (auto [u, v] : pattern.edges()) {
        for (Vertex x : sets[u]) {
          for (Vertex y : sets[v]) {
            if (rng.chance(options.extra_edge_prob)) b.add_edge(x, y);
          }
        }
      }
    }
    if (options.intra_edge_prob > 0) {
      for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (rng.chance(options.intra_edge_prob)) b.add_edge(s[i], s[j]);
          }
        }
      }
    }
    Graph host = b.build();
    if (options.min_girth > 0) {
      auto g = girth(host);
      if (g && *g < options.min_girth) continue;
    }
    std::vector<Vertex> perm(static_cast<std::size_t>(host.order()));
    for (Vertex v = 0; v < host.order(); ++v) perm[v] = v;
    if (options.shuffle) rng.shuffle(perm);
    BranchModel m;
    m.pattern = pattern;
    m.host = relabel(host, perm);
    for (const auto& s : sets) {
      std::vector<Vertex> mapped;
      for (Vertex w : s) mapped.push_back(perm[w]);
      m.branch_sets.push_back(make_set(std::move(mapped)));
    }
    return m;
  }
  throw SpecError("realize_model: no host with girth >= " + std::to_string(options.min_girth) + " within " +
                  std::to_string(options.max_attempts) + " attempts");
}

namespace {

std::vector<std::uint64_t> extend_keys(const std::vector<std::uint64_t>& base, int n, bool connected) {
  std::vector<std::uint64_t> keys;
  const std::uint32_t masks = 1U << (n - 1);
  for (std::uint64_t key : base) {
    const Graph g = unpack_small(key);
    std::vector<Edge> edges = g.edges();
    const std::size_t base_edges = edges.size();
    for (std::uint32_t mask = connected ? 1 : 0; mask < masks; ++mask) {
      edges.resize(base_edges);
      for (Vertex u = 0; u < n - 1; ++u) {
        if ((mask >> u) & 1U) edges.emplace_back(u, n - 1);
      }
      keys.push_back(pack_small(canonical_form(Graph::from_edges(n, edges)).graph));
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

std::vector<Graph> enumerate(int n, bool connected) {
  if (n > kEnumerationCap) {
    throw InvalidInput("enumeration is capped at n = " + std::to_string(kEnumerationCap) +
                       "; ingest an external graph6 census (e.g. from geng) for larger orders");
  }
  if (n < 0) throw InvalidInput("enumeration: negative order");
  static std::mutex lock;
  static std::map<std::pair<int, bool>, std::vector<std::uint64_t>> cache;
  std::lock_guard guard(lock);
  auto keys_for = [&](auto&& self, int m) -> const std::vector<std::uint64_t>& {
    auto it = cache.find({m, connected});
    if (it != cache.end()) return it->second;
    std::vector<std::uint64_t> keys;
    if (m == 0) {
      if (!connected) keys.push_back(pack_small(Graph::from_edges(0, {})));
    } else if (m == 1) {
      keys.push_back(pack_small(Graph::from_edges(1, {})));
    } else {
      keys = extend_keys(self(self, m - 1), m, connected);
    }
    return cache.emplace(std::make_pair(m, connected), std::move(keys)).first->second;
  };
  std::vector<Graph> out;
  for (std::uint64_t key : keys_for(keys_for, n)) out.push_back(unpack_small(key));
  return out;
}

std::vector<int> parse_ints(const std::string& text, const std::string& name) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i || j - i > 6) throw InvalidInput("unknown graph name '" + name + "'");
    out.push_back(std::stoi(text.substr(i, j - i)));
    if (j < text.size() && text[j] != ',' && text[j] != 'x') throw InvalidInput("unknown graph name '" + name + "'");
    i = j + (j < text.size() ? 1 : 0);
    if (j + 1 == text.size()) throw InvalidInput("unknown graph name '" + name + "'");
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) { return enumerate(n, true); }
std::vector<Graph> enumerate_graphs(int n) { return enumerate(n, false); }

Graph named_graph(const std::string& name) {
  std::string s;
  for (char c : name) {
    if (c != '_' && c != '{' && c != '}' && c != ' ') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "claw") return complete_bipartite(1, 3);
  if (s == "k23star" || s == "k*2,3" || s == "k2,3*") return k23star();
  if (s == "k33") return complete_bipartite(3, 3);
  if (s == "k34") return complete_bipartite(3, 4);
  auto with_prefix = [&](const std::string& prefix) -> std::optional<std::vector<int>> {
    if (s.rfind(prefix, 0) != 0 || s.size() == prefix.size()) return std::nullopt;
    return parse_ints(s.substr(prefix.size()), name);
  };
  if (auto v = with_prefix("theta"); v && v->size() == 3) return theta((*v)[0], (*v)[1], (*v)[2]);
  if (auto v = with_prefix("prism"); v && v->size() == 3) return prism((*v)[0], (*v)[1], (*v)[2]);
  if (auto v = with_prefix("pyramid"); v && v->size() == 3) return pyramid((*v)[0], (*v)[1], (*v)[2]);
  if (auto v = with_prefix("grid"); v && v->size() == 2) return grid((*v)[0], (*v)[1]);
  if (auto v = with_prefix("k"); v) {
    if (v->size() == 1) return complete((*v)[0]);
    if (v->size() == 2) return complete_bipartite((*v)[0], (*v)[1]);
  }
  if (auto v = with_prefix("c"); v && v->size() == 1) return cycle((*v)[0]);
  if (auto v = with_prefix("p"); v && v->size() == 1) return path((*v)[0]);
  throw InvalidInput("unknown graph name '" + name + "'");
}

}  // namespace imlab
