#include "imlab/detectors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "imlab/error.hpp"

namespace imlab {

const char* to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::theta:
      return "theta";
    case ConfigKind::prism:
      return "prism";
    case ConfigKind::pyramid:
      return "pyramid";
  }
  return "?";
}

std::vector<Vertex> ThreePCWitness::ends() const {
  switch (kind) {
    case ConfigKind::theta:
      return {paths[0].front(), paths[0].back()};
    case ConfigKind::prism:
      return {paths[0].front(), paths[1].front(), paths[2].front(), paths[0].back(), paths[1].back(), paths[2].back()};
    case ConfigKind::pyramid:
      return {paths[0].front(), paths[0].back(), paths[1].back(), paths[2].back()};
  }
  return {};
}

VertexSet ThreePCWitness::vertices() const {
  std::vector<Vertex> all;
  for (const auto& p : paths) all.insert(all.end(), p.begin(), p.end());
  return make_set(std::move(all));
}

std::array<int, 3> ThreePCWitness::lengths() const {
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = static_cast<int>(paths[i].size()) - 1;
  return out;
}

std::string check_3pc(const Graph& g, const ThreePCWitness& w, bool allow_prism_zero) {
  for (const auto& p : w.paths) {
    if (p.empty()) return "empty path";
    for (Vertex v : p) {
      if (!g.contains(v)) return "vertex " + std::to_string(v) + " out of range";
    }
  }
  const auto len = w.lengths();
  std::set<Edge> expected;
  auto expect = [&](Vertex u, Vertex v) { expected.insert({std::min(u, v), std::max(u, v)}); };
  std::map<Vertex, int> uses;
  for (const auto& p : w.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      ++uses[p[i]];
      if (i > 0) expect(p[i - 1], p[i]);
    }
  }
  auto uses_ok = [&](const std::vector<Vertex>& shared) {
    for (auto [v, c] : uses) {
      const bool is_shared = std::find(shared.begin(), shared.end(), v) != shared.end();
      if (c != (is_shared ? 3 : 1)) return false;
    }
    return true;
  };

  switch (w.kind) {
    case ConfigKind::theta: {
      const Vertex a = w.paths[0].front();
      const Vertex b = w.paths[0].back();
      for (const auto& p : w.paths) {
        if (p.front() != a || p.back() != b) return "theta paths must share both ends";
      }
      if (a == b) return "theta ends coincide";
      for (int l : len) {
        if (l < 2) return "theta path shorter than two";
      }
      if (!uses_ok({a, b})) return "theta paths are not internally disjoint";
      break;
    }
    case ConfigKind::prism: {
      const int zeros = static_cast<int>(std::count(len.begin(), len.end(), 0));
      if (zeros > 1) return "prism has more than one length-0 path";
      if (zeros == 1 && !allow_prism_zero) return "prism length-0 path not allowed";
      for (int l : len) {
        if (zeros == 1 && l == 1) return "prism with a length-0 path needs the others of length at least two";
      }
      if (!uses_ok({})) return "prism paths are not vertex-disjoint";
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          expect(w.paths[i].front(), w.paths[j].front());
          expect(w.paths[i].back(), w.paths[j].back());
        }
      }
      break;
    }
    case ConfigKind::pyramid: {
      const Vertex apex = w.paths[0].front();
      for (const auto& p : w.paths) {
        if (p.front() != apex) return "pyramid paths must share the apex";
      }
      int long_paths = 0;
      for (int l : len) {
        if (l < 1) return "pyramid path of length zero";
        if (l >= 2) ++long_paths;
      }
      if (long_paths < 2) return "pyramid needs two paths of length at least two";
      if (!uses_ok({apex})) return "pyramid paths are not internally disjoint";
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) expect(w.paths[i].back(), w.paths[j].back());
      }
      break;
    }
  }
  const VertexSet vs = w.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const bool want = expected.count({vs[i], vs[j]}) > 0;
      if (g.adjacent(vs[i], vs[j]) != want) {
        return std::string(want ? "missing edge " : "extra edge ") + std::to_string(vs[i]) + "-" +
               std::to_string(vs[j]);
      }
    }
  }
  return {};
}

bool is_hole(const Graph& g, const std::vector<Vertex>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  const VertexSet s = make_set(cycle);
  if (s.size() != k) return false;
  for (Vertex v : cycle) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  }
  return induced_subgraph(g, s).graph.size() == k;
}

bool pairwise_holes(const Graph& g, const ThreePCWitness& w) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::vector<Vertex> c = w.paths[i];
      std::vector<Vertex> back(w.paths[j].rbegin(), w.paths[j].rend());
      if (w.kind == ConfigKind::theta) {
        c.insert(c.end(), back.begin() + 1, back.end() - 1);
      } else if (w.kind == ConfigKind::pyramid) {
        c.insert(c.end(), back.begin(), back.end() - 1);
      } else {
        c.insert(c.end(), back.begin(), back.end());
      }
      if (!is_hole(g, c)) return false;
    }
  }
  return true;
}

namespace {

// Follows degree-2 vertices from `from` through `first` until a vertex not of
// degree 2 is hit. Returns the walk including both ends, or empty on a cycle.
std::vector<Vertex> walk(const Graph& g, Vertex from, Vertex first) {
  std::vector<Vertex> p{from, first};
  Vertex prev = from;
  Vertex cur = first;
  while (g.degree(cur) == 2) {
    Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
    if (next == from) return {};
    prev = cur;
    cur = next;
    p.push_back(cur);
    if (p.size() > static_cast<std::size_t>(g.order()) + 1) return {};
  }
  return p;
}

std::vector<Vertex> with_degree(const Graph& g, int d) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == d) out.push_back(v);
  }
  return out;
}

bool only_degrees(const Graph& g, std::initializer_list<int> allowed) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::find(allowed.begin(), allowed.end(), g.degree(v)) == allowed.end()) return false;
  }
  return true;
}

}  // namespace

std::optional<ThreePCWitness> is_theta(const Graph& g) {
  if (g.order() < 5 || !only_degrees(g, {2, 3}) || !is_connected(g)) return std::nullopt;
  const auto ends = with_degree(g, 3);
  if (ends.size() != 2 || g.adjacent(ends[0], ends[1])) return std::nullopt;
  ThreePCWitness w;
  w.kind = ConfigKind::theta;
  for (int i = 0; i < 3; ++i) {
    auto p = walk(g, ends[0], g.neighbors(ends[0])[i]);
    if (p.empty() || p.back() != ends[1]) return std::nullopt;
    w.paths[i] = std::move(p);
  }
  if (!verify_3pc(g, w)) return std::nullopt;
  return w;
}

std::optional<ThreePCWitness> is_pyramid(const Graph& g) {
  if (g.order() < 6 || !only_degrees(g, {2, 3}) || !is_connected(g)) return std::nullopt;
  const auto big = with_degree(g, 3);
  if (big.size() != 4) return std::nullopt;
  for (Vertex apex : big) {
    std::vector<Vertex> tri;
    for (Vertex v : big) {
      if (v != apex) tri.push_back(v);
    }
    if (!g.adjacent(tri[0], tri[1]) || !g.adjacent(tri[1], tri[2]) || !g.adjacent(tri[0], tri[2])) continue;
    ThreePCWitness w;
    w.kind = ConfigKind::pyramid;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      auto p = walk(g, apex, g.neighbors(apex)[i]);
      ok = !p.empty() && std::find(tri.begin(), tri.end(), p.back()) != tri.end();
      if (ok) w.paths[i] = std::move(p);
    }
    if (ok && verify_3pc(g, w)) return w;
  }
  return std::nullopt;
}

std::optional<ThreePCWitness> is_prism(const Graph& g, bool allow_zero) {
  if (g.order() < 6 || !is_connected(g)) return std::nullopt;
  const auto d3 = with_degree(g, 3);
  const auto d4 = with_degree(g, 4);
  if (d4.empty() && d3.size() == 6 && only_degrees(g, {2, 3})) {
    std::vector<std::array<Vertex, 3>> tris;
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        for (std::size_t k = j + 1; k < 6; ++k) {
          if (g.adjacent(d3[i], d3[j]) && g.adjacent(d3[j], d3[k]) && g.adjacent(d3[i], d3[k])) {
            tris.push_back({d3[i], d3[j], d3[k]});
          }
        }
      }
    }
    for (const auto& t1 : tris) {
      for (const auto& t2 : tris) {
        if (t1 >= t2) continue;
        ThreePCWitness w;
        w.kind = ConfigKind::prism;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
          Vertex out = -1;
          for (Vertex x : g.neighbors(t1[i])) {
            if (std::find(t1.begin(), t1.end(), x) == t1.end()) out = x;
          }
          auto p = walk(g, t1[i], out);
          ok = !p.empty() && std::find(t2.begin(), t2.end(), p.back()) != t2.end();
          if (ok) w.paths[i] = std::move(p);
        }
        if (ok && verify_3pc(g, w, allow_zero)) return w;
      }
    }
    return std::nullopt;
  }
  if (!allow_zero || d4.size() != 1 || d3.size() != 4 || !only_degrees(g, {2, 3, 4})) return std::nullopt;
  const Vertex c = d4[0];
  const auto nb = g.neighbors(c);
  // Pair c's neighbours into the two triangle edges.
  const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : pairings) {
    const Vertex a2 = nb[pr[0]], a3 = nb[pr[1]], b2 = nb[pr[2]], b3 = nb[pr[3]];
    if (!g.adjacent(a2, a3) || !g.adjacent(b2, b3)) continue;
    ThreePCWitness w;
    w.kind = ConfigKind::prism;
    w.paths[0] = {c};
    bool ok = true;
    int i = 1;
    for (Vertex a : {a2, a3}) {
      Vertex out = -1;
      for (Vertex x : g.neighbors(a)) {
        if (x != c && x != (a == a2 ? a3 : a2)) out = x;
      }
      auto p = walk(g, a, out);
      ok = ok && !p.empty() && (p.back() == b2 || p.back() == b3);
      if (ok) w.paths[i++] = std::move(p);
    }
    if (ok && verify_3pc(g, w, true)) return w;
  }
  return std::nullopt;
}

std::optional<ThreePCWitness> is_3pc(const Graph& g, bool allow_prism_zero) {
  std::optional<ThreePCWitness> w = is_theta(g);
  if (!w) w = is_prism(g, allow_prism_zero);
  if (!w) w = is_pyramid(g);
  if (w && !pairwise_holes(g, *w)) {
    throw std::logic_error("is_3pc: recognised configuration fails the pairwise-hole characterisation");
  }
  return w;
}

std::vector<ConfigKind> recognized_kinds(const Graph& g, bool allow_prism_zero) {
  std::vector<ConfigKind> out;
  if (is_theta(g)) out.push_back(ConfigKind::theta);
  if (is_prism(g, allow_prism_zero)) out.push_back(ConfigKind::prism);
  if (is_pyramid(g)) out.push_back(ConfigKind::pyramid);
  return out;
}

namespace {

// Backtracking search for three paths between fixed ends such that the union
// induces exactly the paths plus the edges already present among the ends.
class PathSystem {
 public:
  PathSystem(const Graph& g, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g), budget_(budget), nodes_(nodes), cnt_(static_cast<std::size_t>(g.order()), 0),
        placed_(static_cast<std::size_t>(g.order()), 0), seen_(static_cast<std::size_t>(g.order()), 0) {}

  // from/to per path; from == to marks a length-0 path. `ordered` forces the
  // first interior vertices to increase (paths are interchangeable).
  bool solve(const std::vector<Vertex>& ends, const std::array<Vertex, 3>& from, const std::array<Vertex, 3>& to,
             bool ordered) {
    from_ = from;
    to_ = to;
    ordered_ = ordered;
    for (Vertex e : ends) place(e);
    for (int i = 0; i < 3; ++i) paths_[i] = {from[i]};
    const bool hit = extend(0);
    for (Vertex e : ends) unplace(e);
    return hit;
  }

  bool aborted() const { return aborted_; }
  std::array<std::vector<Vertex>, 3> paths_;

 private:
  void place(Vertex x) {
    placed_[x] = 1;
    for (Vertex w : g_.neighbors(x)) ++cnt_[w];
  }
  void unplace(Vertex x) {
    placed_[x] = 0;
    for (Vertex w : g_.neighbors(x)) --cnt_[w];
  }

  int need(Vertex x, Vertex t) const { return 1 + (g_.adjacent(x, t) ? 1 : 0); }

  // Is there still a chordless route from tip to t avoiding everything placed?
  bool reachable(Vertex tip, Vertex t) {
    ++stamp_;
    std::vector<Vertex> queue;
    for (Vertex x : g_.neighbors(tip)) {
      if (placed_[x] || cnt_[x] != need(x, t)) continue;
      if (g_.adjacent(x, t)) return true;
      seen_[x] = stamp_;
      queue.push_back(x);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex y : g_.neighbors(queue[head])) {
        if (placed_[y] || seen_[y] == stamp_) continue;
        const int adj_t = g_.adjacent(y, t) ? 1 : 0;
        if (cnt_[y] - adj_t != 0) continue;
        if (adj_t) return true;
        seen_[y] = stamp_;
        queue.push_back(y);
      }
    }
    return false;
  }

  bool extend(int i) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (i == 3) return true;
    auto& p = paths_[i];
    const Vertex t = to_[i];
    if (from_[i] == t) return extend(i + 1);
    const Vertex tip = p.back();
    if (p.size() == 1 && g_.adjacent(tip, t)) {
      p.push_back(t);
      if (extend(i + 1)) return true;
      p.pop_back();
      return false;
    }
    for (int j = i; j < 3; ++j) {
      if (from_[j] == to_[j]) continue;
      const Vertex s = j == i ? tip : from_[j];
      if (j > i && g_.adjacent(s, to_[j])) continue;
      if (!reachable(s, to_[j])) return false;
    }
    for (Vertex x : g_.neighbors(tip)) {
      if (placed_[x] || cnt_[x] != need(x, t)) continue;
      if (ordered_ && p.size() == 1 && i > 0 && x <= paths_[i - 1][1]) continue;
      place(x);
      p.push_back(x);
      bool hit;
      if (g_.adjacent(x, t)) {
        p.push_back(t);
        hit = extend(i + 1);
        if (!hit) p.pop_back();
      } else {
        hit = extend(i);
      }
      if (hit) return true;
      p.pop_back();
      unplace(x);
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::vector<int> cnt_;
  std::vector<char> placed_;
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::array<Vertex, 3> from_{};
  std::array<Vertex, 3> to_{};
  bool ordered_ = false;
  bool aborted_ = false;
};

std::vector<std::array<Vertex, 3>> triangles(const Graph& g, int min_degree) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) < min_degree) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || g.degree(v) < min_degree) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || g.degree(w) < min_degree || !g.adjacent(u, w)) continue;
        out.push_back({u, v, w});
      }
    }
  }
  return out;
}

// Shared driver: `next` tries end structures in order and returns true when
// one completes (or the budget runs out).
template <class Try>
DetectResult drive(const Graph& g, const DetectOptions& options, ConfigKind kind, Try&& try_ends) {
  DetectResult res;
  PathSystem ps(g, options.budget, res.nodes);
  const bool hit = try_ends(ps);
  if (ps.aborted()) {
    res.status = SearchStatus::indeterminate;
    return res;
  }
  if (!hit) return res;
  ThreePCWitness w;
  w.kind = kind;
  w.paths = ps.paths_;
  if (auto why = check_3pc(g, w, options.allow_prism_zero); !why.empty()) {
    throw std::logic_error("3PC search produced an invalid witness: " + why);
  }
  res.status = SearchStatus::found;
  res.witness = std::move(w);
  return res;
}

}  // namespace

DetectResult contains_theta(const Graph& g, const DetectOptions& options) {
  return drive(g, options, ConfigKind::theta, [&](PathSystem& ps) {
    for (Vertex a = 0; a < g.order(); ++a) {
      if (g.degree(a) < 3) continue;
      for (Vertex b = a + 1; b < g.order(); ++b) {
        if (g.degree(b) < 3 || g.adjacent(a, b)) continue;
        if (ps.solve({a, b}, {a, a, a}, {b, b, b}, true)) return true;
        if (ps.aborted()) return false;
      }
    }
    return false;
  });
}

DetectResult contains_pyramid(const Graph& g, const DetectOptions& options) {
  const auto tris = triangles(g, 3);
  return drive(g, options, ConfigKind::pyramid, [&](PathSystem& ps) {
    for (Vertex apex = 0; apex < g.order(); ++apex) {
      if (g.degree(apex) < 3) continue;
      for (const auto& t : tris) {
        if (apex == t[0] || apex == t[1] || apex == t[2]) continue;
        const int touching = g.adjacent(apex, t[0]) + g.adjacent(apex, t[1]) + g.adjacent(apex, t[2]);
        if (touching > 1) continue;
        if (ps.solve({apex, t[0], t[1], t[2]}, {apex, apex, apex}, t, false)) return true;
        if (ps.aborted()) return false;
      }
    }
    return false;
  });
}

DetectResult contains_prism(const Graph& g, const DetectOptions& options) {
  const auto tris = triangles(g, 3);
  return drive(g, options, ConfigKind::prism, [&](PathSystem& ps) {
    for (std::size_t i = 0; i < tris.size(); ++i) {
      const auto& ta = tris[i];
      for (std::size_t j = i + 1; j < tris.size(); ++j) {
        const auto& tb = tris[j];
        bool disjoint = true;
        for (Vertex x : ta) disjoint = disjoint && std::find(tb.begin(), tb.end(), x) == tb.end();
        if (!disjoint) continue;
        std::array<int, 3> sigma{0, 1, 2};
        do {
          bool ok = true;
          for (int p = 0; p < 3 && ok; ++p) {
            for (int q = 0; q < 3 && ok; ++q) {
              if (q != sigma[p] && g.adjacent(ta[p], tb[q])) ok = false;
            }
          }
          if (!ok) continue;
          const std::array<Vertex, 3> to{tb[sigma[0]], tb[sigma[1]], tb[sigma[2]]};
          if (ps.solve({ta[0], ta[1], ta[2], tb[0], tb[1], tb[2]}, ta, to, false)) return true;
          if (ps.aborted()) return false;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }
    }
    if (!options.allow_prism_zero) return false;
    for (Vertex c = 0; c < g.order(); ++c) {
      if (g.degree(c) < 4) continue;
      std::vector<Edge> edges;
      const auto nb = g.neighbors(c);
      for (std::size_t p = 0; p < nb.size(); ++p) {
        for (std::size_t q = p + 1; q < nb.size(); ++q) {
          if (g.degree(nb[p]) >= 3 && g.degree(nb[q]) >= 3 && g.adjacent(nb[p], nb[q])) edges.emplace_back(nb[p], nb[q]);
        }
      }
      for (std::size_t p = 0; p < edges.size(); ++p) {
        for (std::size_t q = p + 1; q < edges.size(); ++q) {
          auto [a2, a3] = edges[p];
          auto [b2, b3] = edges[q];
          if (a2 == b2 || a2 == b3 || a3 == b2 || a3 == b3) continue;
          if (g.adjacent(a2, b2) || g.adjacent(a2, b3) || g.adjacent(a3, b2) || g.adjacent(a3, b3)) continue;
          for (int flip = 0; flip < 2; ++flip) {
            const std::array<Vertex, 3> from{c, a2, a3};
            const std::array<Vertex, 3> to{c, flip ? b3 : b2, flip ? b2 : b3};
            if (ps.solve({c, a2, a3, b2, b3}, from, to, false)) return true;
            if (ps.aborted()) return false;
          }
        }
      }
    }
    return false;
  });
}

DetectResult contains_3pc(const Graph& g, const DetectOptions& options) {
  std::uint64_t nodes = 0;
  bool unknown = false;
  for (auto* f : {&contains_theta, &contains_prism, &contains_pyramid}) {
    DetectResult r = f(g, options);
    nodes += r.nodes;
    if (r.found()) {
      r.nodes = nodes;
      return r;
    }
    if (r.status == SearchStatus::indeterminate) unknown = true;
  }
  DetectResult out;
  out.nodes = nodes;
  out.status = unknown ? SearchStatus::indeterminate : SearchStatus::not_found;
  return out;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (best && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int c = dist[u] + dist[w] + 1;
          if (!best || c < best) best = c;
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return best;
}

std::optional<std::array<Vertex, 3>> contains_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) return std::array<Vertex, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

bool for_each_hole(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& f, std::uint64_t budget,
                   std::uint64_t* nodes) {
  const int n = g.order();
  std::vector<int> cnt(static_cast<std::size_t>(n), 0);  // neighbours on the path, start excluded
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> path;
  std::uint64_t count = 0;
  bool stop = false;
  auto push = [&](Vertex x) {
    path.push_back(x);
    on[x] = 1;
    if (path.size() > 1) {
      for (Vertex w : g.neighbors(x)) ++cnt[w];
    }
  };
  auto pop = [&]() {
    const Vertex x = path.back();
    if (path.size() > 1) {
      for (Vertex w : g.neighbors(x)) --cnt[w];
    }
    on[x] = 0;
    path.pop_back();
  };
  // Path s = p0, p1, ..., tip; every vertex above s, chordless so far.
  auto extend = [&](auto&& self) -> void {
    if (stop) return;
    if (++count > budget) {
      stop = true;
      return;
    }
    const Vertex s = path.front();
    const Vertex tip = path.back();
    for (Vertex x : g.neighbors(tip)) {
      if (x <= s || on[x]) continue;
      // x may touch only the tip among path[1..]; touching s closes a cycle.
      const int expected = path.size() > 1 ? 1 : 0;
      if (cnt[x] != expected) continue;
      if (path.size() >= 2 && g.adjacent(x, s)) {
        if (path.size() >= 3 && path[1] < x) {
          path.push_back(x);
          if (!f(path)) stop = true;
          path.pop_back();
          if (stop) return;
        }
        continue;
      }
      push(x);
      self(self);
      pop();
      if (stop) return;
    }
  };
  for (Vertex s = 0; s < n && !stop; ++s) {
    push(s);
    extend(extend);
    pop();
  }
  if (nodes) *nodes = count;
  return !stop;
}

HoleResult contains_even_hole(const Graph& g, std::uint64_t budget) {
  HoleResult res;
  const bool complete = for_each_hole(
      g,
      [&](const std::vector<Vertex>& h) {
        if (h.size() % 2 != 0) return true;
        res.hole = h;
        return false;
      },
      budget);
  if (!res.hole.empty()) {
    res.status = SearchStatus::found;
  } else if (!complete) {
    res.status = SearchStatus::indeterminate;
  }
  return res;
}

std::vector<Wheel> find_wheels(const Graph& g) {
  std::vector<Wheel> out;
  for_each_hole(g, [&](const std::vector<Vertex>& h) {
    const VertexSet rim = make_set(h);
    for (Vertex c = 0; c < g.order(); ++c) {
      if (set_contains(rim, c)) continue;
      int spokes = 0;
      for (Vertex v : h) spokes += g.adjacent(c, v) ? 1 : 0;
      if (spokes >= 3) out.push_back({c, h, spokes});
    }
    return true;
  });
  return out;
}

bool is_even_wheel(const Graph& g, Vertex center, const std::vector<Vertex>& rim) {
  if (!g.contains(center) || !is_hole(g, rim)) return false;
  if (std::find(rim.begin(), rim.end(), center) != rim.end()) return false;
  int spokes = 0;
  for (Vertex v : rim) spokes += g.adjacent(center, v) ? 1 : 0;
  return spokes >= 4 && spokes % 2 == 0;
}

std::optional<Wheel> contains_even_wheel(const Graph& g) {
  std::optional<Wheel> out;
  for_each_hole(g, [&](const std::vector<Vertex>& h) {
    for (Vertex c = 0; c < g.order(); ++c) {
      if (is_even_wheel(g, c, h)) {
        int spokes = 0;
        for (Vertex v : h) spokes += g.adjacent(c, v) ? 1 : 0;
        out = Wheel{c, h, spokes};
        return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace imlab
