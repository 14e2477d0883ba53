#include "imlab/containment.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "imlab/bits.hpp"
#include "imlab/error.hpp"

namespace imlab {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::induced_subgraph:
      return "induced-subgraph";
    case Relation::induced_minor:
      return "induced-minor";
    case Relation::minor:
      return "minor";
  }
  return "?";
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::not_found:
      return "not-found";
    case SearchStatus::indeterminate:
      return "indeterminate";
  }
  return "?";
}

Relation parse_relation(const std::string& text) {
  if (text == "induced-subgraph") return Relation::induced_subgraph;
  if (text == "induced-minor") return Relation::induced_minor;
  if (text == "minor") return Relation::minor;
  throw InvalidInput("unknown relation '" + text + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

// Twin classes of the pattern (same open or same closed neighbourhood).
// Swapping the branch sets of twins gives another model, so the search only
// looks for models whose roots increase along each class.
void twin_links(const Graph& h, const std::vector<char>& skip, std::vector<int>& prev, std::vector<int>& next) {
  const int k = h.order();
  prev.assign(static_cast<std::size_t>(k), -1);
  next.assign(static_cast<std::size_t>(k), -1);
  auto closed = [&](Vertex v) {
    std::vector<Vertex> s(h.neighbors(v).begin(), h.neighbors(v).end());
    s.push_back(v);
    std::sort(s.begin(), s.end());
    return s;
  };
  for (Vertex w = 0; w < k; ++w) {
    if (skip[w]) continue;
    for (Vertex u = w - 1; u >= 0; --u) {
      if (skip[u]) continue;
      const bool open_twins = std::equal(h.neighbors(u).begin(), h.neighbors(u).end(), h.neighbors(w).begin(),
                                         h.neighbors(w).end());
      if (open_twins || closed(u) == closed(w)) {
        prev[w] = u;
        next[u] = w;
        break;
      }
    }
  }
}

template <int W>
class ModelSearch {
 public:
  ModelSearch(const Graph& g, const Graph& h, bool induced, const SearchOptions& opt)
      : g_(g), h_(h), induced_(induced), budget_(opt.budget), n_(g.order()), k_(h.order()) {
    adj_ = neighbor_bits<W>(g);
    hadj_.assign(static_cast<std::size_t>(k_) * k_, 0);
    for (auto [u, v] : h.edges()) hadj_[u * k_ + v] = hadj_[v * k_ + u] = 1;
    pedges_ = h.edges();
    fixed_ = opt.fixed;
    fixed_.resize(static_cast<std::size_t>(k_));
    std::vector<char> skip(static_cast<std::size_t>(k_), 0);
    for (int v = 0; v < k_; ++v) skip[v] = fixed_[v].empty() ? 0 : 1;
    twin_links(h, skip, twin_prev_, twin_next_);
    stack_.resize(static_cast<std::size_t>(n_) + 2);
    for (auto& node : stack_) {
      node.S.assign(static_cast<std::size_t>(k_), Bits<W>{});
      node.R.assign(static_cast<std::size_t>(k_), Bits<W>{});
      node.excl.assign(static_cast<std::size_t>(k_), Bits<W>{});
      node.root.assign(static_cast<std::size_t>(k_), -1);
    }
    forb_.assign(static_cast<std::size_t>(k_), Bits<W>{});
  }

  SearchStatus run() {
    Node& top = stack_[0];
    top.free = Bits<W>::prefix(n_);
    const Bits<W> all = Bits<W>::prefix(n_);
    for (int v = 0; v < k_; ++v) {
      if (fixed_[v].empty()) continue;
      for (Vertex x : fixed_[v]) {
        if (x < 0 || x >= n_ || !top.free.test(x)) return SearchStatus::not_found;
        add(top, v, x);
      }
      top.root[v] = fixed_[v].front();
      top.excl[v] = all;
      if (!is_connected(g_, fixed_[v])) return SearchStatus::not_found;
    }
    for (int u = 0; u < k_; ++u) {
      for (int v = u + 1; v < k_; ++v) {
        if (fixed_[u].empty() || fixed_[v].empty()) continue;
        if (induced_ && !hadj_[u * k_ + v] && top.S[u].intersects(top.R[v])) return SearchStatus::not_found;
      }
    }
    const bool hit = dfs(0);
    if (aborted_) return SearchStatus::indeterminate;
    return hit ? SearchStatus::found : SearchStatus::not_found;
  }

  std::vector<VertexSet> sets;
  std::uint64_t nodes = 0;

 private:
  struct Node {
    std::vector<Bits<W>> S, R, excl;
    std::vector<int> root;
    Bits<W> free;
  };

  void add(Node& s, int v, Vertex x) const {
    s.S[v].set(x);
    s.R[v] |= adj_[x];
    s.R[v].set(x);
    s.free.reset(x);
  }

  bool sees(const Node& s, int u, int v) const { return s.S[u].intersects(s.R[v]); }

  Bits<W> grow_candidates(const Node& s, int u) const {
    Bits<W> c = s.R[u] & s.free;
    c.and_not(s.excl[u]);
    c.and_not(forb_[u]);
    c.keep_above(s.root[u]);
    return c;
  }

  Bits<W> place_candidates(const Node& s, int v) const {
    Bits<W> c = s.free;
    c.and_not(s.excl[v]);
    c.and_not(forb_[v]);
    if (int p = twin_prev_[v]; p >= 0 && s.root[p] >= 0) c.keep_above(s.root[p]);
    if (int q = twin_next_[v]; q >= 0 && s.root[q] >= 0) c.keep_below(s.root[q]);
    return c;
  }

  // Can S_u reach a neighbour of S_v through vertices either side may still take?
  bool reachable(const Node& s, int u, int v) const {
    Bits<W> avail_u = s.free;
    avail_u.and_not(s.excl[u]);
    avail_u.and_not(forb_[u]);
    avail_u.keep_above(s.root[u]);
    Bits<W> avail_v = s.free;
    avail_v.and_not(s.excl[v]);
    avail_v.and_not(forb_[v]);
    avail_v.keep_above(s.root[v]);
    const Bits<W> avail = avail_u | avail_v;
    Bits<W> reached = s.S[u];
    Bits<W> frontier = s.S[u];
    while (true) {
      Bits<W> nb;
      frontier.for_each([&](int x) { nb |= adj_[x]; });
      if (nb.intersects(s.S[v])) return true;
      nb &= avail;
      nb.and_not(reached);
      if (nb.none()) return false;
      reached |= nb;
      frontier = nb;
    }
  }

  bool dfs(int d) {
    if (++nodes > budget_) {
      aborted_ = true;
      return false;
    }
    Node& s = stack_[d];
    for (int v = 0; v < k_; ++v) {
      forb_[v] = Bits<W>{};
      if (!induced_) continue;
      for (int j = 0; j < k_; ++j) {
        if (j != v && s.root[j] >= 0 && !hadj_[v * k_ + j]) forb_[v] |= s.R[j];
      }
    }

    int best = std::numeric_limits<int>::max();
    int kind = -1;  // 0 = realise edge (bu, bv), 1 = place bu
    int bu = -1;
    int bv = -1;
    Bits<W> cu;
    Bits<W> cv;
    for (auto [u, v] : pedges_) {
      if (s.root[u] < 0 || s.root[v] < 0 || sees(s, u, v)) continue;
      Bits<W> a = grow_candidates(s, u);
      Bits<W> b = grow_candidates(s, v);
      const int count = a.count() + b.count();
      if (count == 0 || !reachable(s, u, v)) return false;
      if (count < best) {
        best = count;
        kind = 0;
        bu = u;
        bv = v;
        cu = a;
        cv = b;
      }
    }
    for (int v = 0; v < k_; ++v) {
      if (s.root[v] >= 0) continue;
      Bits<W> a = place_candidates(s, v);
      const int count = a.count();
      if (count == 0) return false;
      if (count < best) {
        best = count;
        kind = 1;
        bu = v;
        cu = a;
      }
    }
    if (kind < 0) {
      sets.assign(static_cast<std::size_t>(k_), VertexSet{});
      for (int v = 0; v < k_; ++v) s.S[v].for_each([&](int x) { sets[v].push_back(x); });
      return true;
    }

    Node& child = stack_[d + 1];
    if (kind == 1) {
      for (int r = cu.first(); r >= 0; r = cu.next(r)) {
        child = s;
        child.root[bu] = r;
        add(child, bu, r);
        if (dfs(d + 1)) return true;
        if (aborted_) return false;
      }
      return false;
    }
    for (int x = cu.first(); x >= 0; x = cu.next(x)) {
      child = s;
      add(child, bu, x);
      if (dfs(d + 1)) return true;
      if (aborted_) return false;
      s.excl[bu].set(x);
    }
    for (int y = cv.first(); y >= 0; y = cv.next(y)) {
      child = s;
      add(child, bv, y);
      if (dfs(d + 1)) return true;
      if (aborted_) return false;
      s.excl[bv].set(y);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  bool induced_;
  std::uint64_t budget_;
  int n_;
  int k_;
  std::vector<Bits<W>> adj_;
  std::vector<char> hadj_;
  std::vector<Edge> pedges_;
  std::vector<VertexSet> fixed_;
  std::vector<int> twin_prev_;
  std::vector<int> twin_next_;
  std::vector<Node> stack_;
  std::vector<Bits<W>> forb_;
  bool aborted_ = false;
};

ContainmentReport search_model(const Graph& host, const Graph& pattern, bool induced, const SearchOptions& options) {
  const auto start = Clock::now();
  ContainmentReport rep;
  rep.relation = induced ? Relation::induced_minor : Relation::minor;
  const bool has_fixed = std::any_of(options.fixed.begin(), options.fixed.end(), [](const auto& s) { return !s.empty(); });
  if (!options.fixed.empty() && options.fixed.size() != static_cast<std::size_t>(pattern.order())) {
    throw InvalidInput("fixed branch sets: expected one entry per pattern vertex");
  }
  bool impossible = pattern.order() > host.order() || pattern.size() > host.size();
  if (!impossible && options.planarity_prefilter && !has_fixed && pattern.order() >= 5 && is_planar(host) &&
      !is_planar(pattern)) {
    impossible = true;
  }
  if (!impossible) {
    dispatch_width(host.words_per_row(), [&]<int W>() {
      ModelSearch<W> search(host, pattern, induced, options);
      rep.status = search.run();
      rep.stats.nodes = search.nodes;
      if (rep.status == SearchStatus::found) {
        BranchModel m;
        m.pattern = pattern;
        m.host = host;
        m.branch_sets = std::move(search.sets);
        rep.model = std::move(m);
      }
      return 0;
    });
  }
  rep.stats.elapsed_ms = ms_since(start);
  return rep;
}

template <int W>
class SubgraphSearch {
 public:
  SubgraphSearch(const Graph& g, const Graph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), n_(g.order()), k_(h.order()) {
    adj_ = neighbor_bits<W>(g);
    std::vector<char> none(static_cast<std::size_t>(k_), 0);
    twin_links(h, none, twin_prev_, twin_next_);
    // Order: repeatedly take the unordered vertex with most ordered
    // neighbours, ties by degree then id.
    std::vector<char> taken(static_cast<std::size_t>(k_), 0);
    std::vector<int> links(static_cast<std::size_t>(k_), 0);
    for (int step = 0; step < k_; ++step) {
      int pick = -1;
      for (int v = 0; v < k_; ++v) {
        if (taken[v]) continue;
        if (pick < 0 || links[v] > links[pick] || (links[v] == links[pick] && h.degree(v) > h.degree(pick))) pick = v;
      }
      taken[pick] = 1;
      order_.push_back(pick);
      for (Vertex w : h.neighbors(pick)) ++links[w];
    }
    for (int d = 0; d <= h.order(); ++d) {
      Bits<W> b;
      for (Vertex x = 0; x < n_; ++x) {
        if (g.degree(x) >= d) b.set(x);
      }
      min_degree_.push_back(b);
    }
    map_.assign(static_cast<std::size_t>(k_), -1);
  }

  SearchStatus run() {
    Bits<W> used;
    const bool hit = dfs(0, used);
    if (aborted_) return SearchStatus::indeterminate;
    return hit ? SearchStatus::found : SearchStatus::not_found;
  }

  std::vector<Vertex> map_;
  std::uint64_t nodes = 0;

 private:
  bool dfs(int depth, Bits<W>& used) {
    if (++nodes > budget_) {
      aborted_ = true;
      return false;
    }
    if (depth == k_) return true;
    const int v = order_[depth];
    Bits<W> c = min_degree_[std::min(h_.degree(v), h_.order())];
    c.and_not(used);
    for (int i = 0; i < depth; ++i) {
      const int u = order_[i];
      if (h_.adjacent(u, v)) {
        c &= adj_[map_[u]];
      } else {
        c.and_not(adj_[map_[u]]);
      }
    }
    if (int p = twin_prev_[v]; p >= 0 && map_[p] >= 0) c.keep_above(map_[p]);
    if (int q = twin_next_[v]; q >= 0 && map_[q] >= 0) c.keep_below(map_[q]);
    for (int x = c.first(); x >= 0; x = c.next(x)) {
      map_[v] = x;
      used.set(x);
      if (dfs(depth + 1, used)) return true;
      used.reset(x);
      map_[v] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::uint64_t budget_;
  int n_;
  int k_;
  std::vector<Bits<W>> adj_;
  std::vector<int> twin_prev_;
  std::vector<int> twin_next_;
  std::vector<int> order_;
  std::vector<Bits<W>> min_degree_;
  bool aborted_ = false;
};

}  // namespace

ModelCheck verify_model(const BranchModel& m, Relation relation) {
  const int k = m.pattern.order();
  auto fail = [](int clause, std::string msg) { return ModelCheck{false, clause, std::move(msg)}; };
  if (static_cast<int>(m.branch_sets.size()) != k) {
    return fail(1, "expected " + std::to_string(k) + " branch sets, got " + std::to_string(m.branch_sets.size()));
  }
  std::vector<int> owner(static_cast<std::size_t>(m.host.order()), -1);
  for (int v = 0; v < k; ++v) {
    const auto& s = m.branch_sets[v];
    if (s.empty()) return fail(1, "branch set " + std::to_string(v) + " is empty");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      return fail(1, "branch set " + std::to_string(v) + " is not a sorted set");
    }
    for (Vertex x : s) {
      if (!m.host.contains(x)) return fail(1, "branch set " + std::to_string(v) + " has invalid vertex " + std::to_string(x));
      if (owner[x] >= 0) {
        return fail(1, "vertex " + std::to_string(x) + " in branch sets " + std::to_string(owner[x]) + " and " +
                           std::to_string(v));
      }
      owner[x] = v;
    }
  }
  for (int v = 0; v < k; ++v) {
    if (!is_connected(m.host, m.branch_sets[v])) return fail(2, "branch set " + std::to_string(v) + " is not connected");
  }
  std::vector<char> touch(static_cast<std::size_t>(k) * k, 0);
  for (auto [x, y] : m.host.edges()) {
    if (owner[x] >= 0 && owner[y] >= 0 && owner[x] != owner[y]) {
      touch[owner[x] * k + owner[y]] = touch[owner[y] * k + owner[x]] = 1;
    }
  }
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) {
      const bool edge = m.pattern.adjacent(u, v);
      const bool seen = touch[u * k + v] != 0;
      if (edge && !seen) {
        return fail(3, "pattern edge " + std::to_string(u) + "-" + std::to_string(v) + " has no host edge");
      }
      if (!edge && seen && relation != Relation::minor) {
        return fail(3, "branch sets " + std::to_string(u) + " and " + std::to_string(v) + " touch across a non-edge");
      }
    }
  }
  return {};
}

ContainmentReport contains_induced_subgraph(const Graph& host, const Graph& pattern, const SearchOptions& options) {
  const auto start = Clock::now();
  ContainmentReport rep;
  rep.relation = Relation::induced_subgraph;
  if (pattern.order() <= host.order() && pattern.size() <= host.size()) {
    dispatch_width(host.words_per_row(), [&]<int W>() {
      SubgraphSearch<W> search(host, pattern, options.budget);
      rep.status = search.run();
      rep.stats.nodes = search.nodes;
      if (rep.status == SearchStatus::found) {
        rep.mapping = search.map_;
        BranchModel m;
        m.pattern = pattern;
        m.host = host;
        for (Vertex x : search.map_) m.branch_sets.push_back({x});
        rep.model = std::move(m);
      }
      return 0;
    });
  }
  rep.stats.elapsed_ms = ms_since(start);
  return rep;
}

ContainmentReport contains_induced_minor(const Graph& host, const Graph& pattern, const SearchOptions& options) {
  return search_model(host, pattern, true, options);
}

ContainmentReport contains_minor(const Graph& host, const Graph& pattern, const SearchOptions& options) {
  return search_model(host, pattern, false, options);
}

ContainmentReport contains(Relation relation, const Graph& host, const Graph& pattern, const SearchOptions& options) {
  switch (relation) {
    case Relation::induced_subgraph:
      return contains_induced_subgraph(host, pattern, options);
    case Relation::induced_minor:
      return contains_induced_minor(host, pattern, options);
    case Relation::minor:
      return contains_minor(host, pattern, options);
  }
  return {};
}

namespace {

// Searches the pattern inside host[keep], frozen sets pinned; maps the
// result back to host ids.
ContainmentReport search_within(const BranchModel& m, const VertexSet& keep, const MinimizeOptions& options) {
  const auto r = induced_subgraph(m.host, keep);
  SearchOptions so;
  so.budget = options.budget;
  so.planarity_prefilter = false;
  for (int v = 0; v < m.pattern.order(); ++v) {
    VertexSet fixed;
    if (v < static_cast<int>(options.frozen.size()) && options.frozen[v]) {
      for (Vertex x : m.branch_sets[v]) fixed.push_back(r.old_to_new[x]);
      fixed = make_set(std::move(fixed));
    }
    so.fixed.push_back(std::move(fixed));
  }
  auto rep = contains_induced_minor(r.graph, m.pattern, so);
  if (rep.model) {
    for (auto& s : rep.model->branch_sets) {
      for (auto& x : s) x = r.new_to_old[x];
      s = make_set(std::move(s));
    }
    rep.model->host = m.host;
  }
  return rep;
}

bool frozen_at(const MinimizeOptions& options, int v) {
  return v < static_cast<int>(options.frozen.size()) && options.frozen[v];
}

int owner_of(const BranchModel& m, Vertex a) {
  for (int v = 0; v < static_cast<int>(m.branch_sets.size()); ++v) {
    if (set_contains(m.branch_sets[v], a)) return v;
  }
  return -1;
}

// Removing a from its set: keep the lowest component of the rest that still
// sees every pattern neighbour's set.
std::optional<VertexSet> repair(const BranchModel& m, int v, Vertex a) {
  VertexSet rest = set_difference(m.branch_sets[v], {a});
  if (rest.empty()) return std::nullopt;
  const auto r = induced_subgraph(m.host, rest);
  for (const auto& comp : connected_components(r.graph)) {
    VertexSet c;
    for (Vertex x : comp) c.push_back(r.new_to_old[x]);
    c = make_set(std::move(c));
    bool ok = true;
    for (Vertex u : m.pattern.neighbors(v)) {
      if (!sees(m.host, c, m.branch_sets[u])) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace

MinimizeResult minimize_model(const BranchModel& m, const MinimizeOptions& options) {
  if (auto check = verify_model(m); !check.ok) {
    throw PreconditionError("minimize_model: input is not a valid model (clause " + std::to_string(check.clause) +
                            ": " + check.message + ")");
  }
  MinimizeResult res;
  res.model = m;
  const auto initial = m.vertex_union().size();
  // A vertex whose deletion leaves no model stays non-removable as the union
  // shrinks, so each vertex is refuted at most once.
  std::vector<char> settled(static_cast<std::size_t>(m.host.order()), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex a : res.model.vertex_union()) {
      if (settled[a]) continue;
      const int v = owner_of(res.model, a);
      if (frozen_at(options, v)) continue;
      if (auto fixed = repair(res.model, v, a)) {
        res.model.branch_sets[v] = std::move(*fixed);
        changed = true;
        break;
      }
      auto rep = search_within(res.model, set_difference(res.model.vertex_union(), {a}), options);
      if (rep.found()) {
        res.model.branch_sets = std::move(rep.model->branch_sets);
        changed = true;
        break;
      }
      if (rep.status == SearchStatus::indeterminate) res.exact = false;
      settled[a] = 1;
    }
  }
  res.removed = static_cast<int>(initial - res.model.vertex_union().size());
  return res;
}

SearchStatus find_removable_vertex(const BranchModel& m, const MinimizeOptions& options, Vertex* removable) {
  bool unknown = false;
  for (Vertex a : m.vertex_union()) {
    if (frozen_at(options, owner_of(m, a))) continue;
    auto rep = search_within(m, set_difference(m.vertex_union(), {a}), options);
    if (rep.found()) {
      if (removable) *removable = a;
      return SearchStatus::found;
    }
    if (rep.status == SearchStatus::indeterminate) unknown = true;
  }
  return unknown ? SearchStatus::indeterminate : SearchStatus::not_found;
}

bool has_cycle_longer_than(const Graph& g, const VertexSet& s, int bound) {
  const auto r = induced_subgraph(g, s);
  const Graph& h = r.graph;
  const int n = h.order();
  if (n <= bound) return false;
  // Forests have no cycles at all.
  if (h.size() + connected_components(h).size() == static_cast<std::size_t>(n)) return false;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  // Cycles are rooted at their smallest vertex.
  auto extend = [&](auto&& self, Vertex start, Vertex at, int len) -> bool {
    for (Vertex w : h.neighbors(at)) {
      if (w == start && len >= 3 && len > bound) return true;
      if (w <= start || on[w]) continue;
      on[w] = 1;
      const bool hit = self(self, start, w, len + 1);
      on[w] = 0;
      if (hit) return true;
    }
    return false;
  };
  for (Vertex s0 = 0; s0 < n; ++s0) {
    on[s0] = 1;
    const bool hit = extend(extend, s0, s0, 1);
    on[s0] = 0;
    if (hit) return true;
  }
  return false;
}

std::vector<Vertex> girth_tree_violations(const BranchModel& m) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < m.pattern.order(); ++v) {
    if (has_cycle_longer_than(m.host, m.branch_sets[v], m.pattern.degree(v))) out.push_back(v);
  }
  return out;
}

bool check_girth_tree_property(const BranchModel& m) { return girth_tree_violations(m).empty(); }

PrivateSets private_branch_sets(const BranchModel& m, Vertex v) {
  if (v < 0 || v >= m.pattern.order()) throw InvalidInput("private_branch_sets: bad pattern vertex");
  const auto& set = m.branch_sets[v];
  const auto r = induced_subgraph(m.host, set);
  if (!is_connected(r.graph) || r.graph.size() + 1 != set.size()) {
    throw PreconditionError("private_branch_sets: branch set " + std::to_string(v) + " does not induce a tree");
  }
  PrivateSets out;
  if (set.size() < 2) return out;
  for (Vertex i = 0; i < r.graph.order(); ++i) {
    if (r.graph.degree(i) != 1) continue;
    const Vertex w = r.new_to_old[i];
    bool found = false;
    for (Vertex u = 0; u < m.pattern.order() && !found; ++u) {
      if (u == v) continue;
      const VertexSet contact = attachments(m.host, set, m.branch_sets[u]);
      if (contact.size() == 1 && contact.front() == w) {
        out.privates[w] = u;
        found = true;
      }
    }
    if (!found) out.violations.push_back(w);
  }
  return out;
}

}  // namespace imlab
