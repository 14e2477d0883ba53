#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

namespace {

bool model_search(const Graph& host, const Graph& pattern, bool induced) {
  const int n = host.order();
  const int k = pattern.order();
  if (k == 0) return true;
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> used(static_cast<std::size_t>(k), 0);
  int distinct = 0;

  auto complete = [&]() {
    for (int l = 0; l < k; ++l) {
      std::vector<int> vs;
      for (int v = 0; v < n; ++v) {
        if (label[v] == l) vs.push_back(v);
      }
      if (vs.empty() || !connected(host, vs)) return false;
    }
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        bool touch = false;
        for (int u = 0; u < n && !touch; ++u) {
          for (int v = 0; v < n && !touch; ++v) {
            touch = label[u] == a && label[v] == b && host.adjacent(u, v);
          }
        }
        if (pattern.adjacent(a, b) && !touch) return false;
        if (induced && !pattern.adjacent(a, b) && touch) return false;
      }
    }
    return true;
  };

  std::function<bool(int)> assign = [&](int v) -> bool {
    if (distinct + (n - v) < k) return false;
    if (v == n) return complete();
    for (int l = -1; l < k; ++l) {
      if (induced && l >= 0) {
        bool clash = false;
        for (int u = 0; u < v && !clash; ++u) {
          clash = label[u] >= 0 && label[u] != l && host.adjacent(u, v) && !pattern.adjacent(label[u], l);
        }
        if (clash) continue;
      }
      label[v] = l;
      if (l >= 0 && used[l]++ == 0) ++distinct;
      const bool ok = assign(v + 1);
      if (l >= 0 && --used[l] == 0) --distinct;
      label[v] = -1;
      if (ok) return true;
    }
    return false;
  };
  return assign(0);
}

std::vector<int> degrees_in(const Graph& g, const std::vector<int>& vs) {
  std::vector<int> d(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (i != j && g.adjacent(vs[i], vs[j])) ++d[i];
    }
  }
  return d;
}

// Components of the graph on `vs` with adjacency `adj`.
std::vector<std::vector<int>> components(const std::vector<int>& vs, const std::function<bool(int, int)>& adj) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(vs.size(), 0);
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    std::vector<int> comp;
    while (!stack.empty()) {
      const auto i = stack.back();
      stack.pop_back();
      comp.push_back(vs[i]);
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (!seen[j] && adj(vs[i], vs[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

bool theta_shape(const Graph& g, const std::vector<int>& vs) {
  if (vs.size() < 5 || !connected(g, vs)) return false;
  const auto d = degrees_in(g, vs);
  std::vector<int> threes;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (d[i] == 3) {
      threes.push_back(vs[i]);
    } else if (d[i] != 2) {
      return false;
    }
  }
  if (threes.size() != 2 || g.adjacent(threes[0], threes[1])) return false;
  std::vector<int> rest;
  for (int v : vs) {
    if (v != threes[0] && v != threes[1]) rest.push_back(v);
  }
  const auto comps = components(rest, [&](int a, int b) { return g.adjacent(a, b); });
  if (comps.size() != 3) return false;
  for (const auto& c : comps) {
    bool sa = false, sb = false;
    for (int v : c) {
      sa = sa || g.adjacent(v, threes[0]);
      sb = sb || g.adjacent(v, threes[1]);
    }
    if (!sa || !sb) return false;
  }
  return true;
}

bool triangle(const Graph& g, int a, int b, int c) { return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c); }

}  // namespace

bool connected(const Graph& g, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  return components(vs, [&](int a, int b) { return g.adjacent(a, b); }).size() == 1;
}

bool induced_minor(const Graph& host, const Graph& pattern) { return model_search(host, pattern, true); }
bool minor(const Graph& host, const Graph& pattern) { return model_search(host, pattern, false); }

bool has_theta(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 5) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) vs.push_back(v);
    }
    if (theta_shape(g, vs)) return true;
  }
  return false;
}

bool has_even_hole(const Graph& g) {
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < 4 || size % 2 != 0) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) vs.push_back(v);
    }
    const auto d = degrees_in(g, vs);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 2; }) && connected(g, vs)) return true;
  }
  return false;
}

std::string whole_3pc_kind(const Graph& g) {
  const int n = g.order();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  if (n == 0 || !connected(g, all)) return "";
  if (theta_shape(g, all)) return "theta";
  std::vector<int> d3, d4;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 3) {
      d3.push_back(v);
    } else if (d == 4) {
      d4.push_back(v);
    } else if (d != 2) {
      return "";
    }
  }
  auto in = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  // Edges of the given triangles removed.
  auto reduced = [&](const std::vector<std::vector<int>>& tris) {
    return [&g, tris, in](int a, int b) {
      if (!g.adjacent(a, b)) return false;
      for (const auto& t : tris) {
        if (in(t, a) && in(t, b)) return false;
      }
      return true;
    };
  };

  if (d4.empty() && d3.size() == 4) {
    for (int apex : d3) {
      std::vector<int> t;
      for (int v : d3) {
        if (v != apex) t.push_back(v);
      }
      if (!triangle(g, t[0], t[1], t[2])) continue;
      int touching = 0;
      for (int v : t) touching += g.adjacent(apex, v) ? 1 : 0;
      if (touching > 1) continue;
      // Without the triangle edges the graph is a subdivided claw.
      const auto comps = components(all, reduced({t}));
      int edges = 0;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges += reduced({t})(a, b) ? 1 : 0;
      }
      if (comps.size() == 1 && edges == n - 1) return "pyramid";
    }
  }
  if (d4.empty() && d3.size() == 6) {
    for (int mask = 0; mask < 64; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != 3 || !(mask & 1)) continue;
      std::vector<int> a, b;
      for (int i = 0; i < 6; ++i) (mask >> i & 1 ? a : b).push_back(d3[i]);
      if (!triangle(g, a[0], a[1], a[2]) || !triangle(g, b[0], b[1], b[2])) continue;
      const auto comps = components(all, reduced({a, b}));
      const bool ok = comps.size() == 3 && std::all_of(comps.begin(), comps.end(), [&](const std::vector<int>& c) {
                        const auto na = std::count_if(c.begin(), c.end(), [&](int v) { return in(a, v); });
                        const auto nb = std::count_if(c.begin(), c.end(), [&](int v) { return in(b, v); });
                        return na == 1 && nb == 1;
                      });
      if (ok) return "prism";
    }
  }
  if (d4.size() == 1 && d3.size() == 4) {
    const int c = d4[0];
    for (int i = 1; i < 4; ++i) {
      std::vector<int> p{d3[0], d3[i]}, q;
      for (int j = 1; j < 4; ++j) {
        if (j != i) q.push_back(d3[j]);
      }
      if (!triangle(g, c, p[0], p[1]) || !triangle(g, c, q[0], q[1])) continue;
      std::vector<int> rest;
      for (int v : all) {
        if (v != c) rest.push_back(v);
      }
      const auto comps = components(rest, reduced({{c, p[0], p[1]}, {c, q[0], q[1]}}));
      const bool ok = comps.size() == 2 && std::all_of(comps.begin(), comps.end(), [&](const std::vector<int>& comp) {
                        const auto np = std::count_if(comp.begin(), comp.end(), [&](int v) { return in(p, v); });
                        const auto nq = std::count_if(comp.begin(), comp.end(), [&](int v) { return in(q, v); });
                        return np == 1 && nq == 1 && comp.size() >= 3;
                      });
      if (ok) return "prism";
    }
  }
  return "";
}

int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
    for (int w = 0; w < n; ++w) {
      if (!g.adjacent(v, w)) continue;
      if (w == start && len >= 3) {
        if (best == 0 || len < best) best = len;
      } else if (w > start && !on[w]) {
        on[w] = 1;
        walk(start, w, len + 1);
        on[w] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    on[s] = 1;
    walk(s, s, 1);
    on[s] = 0;
  }
  return best;
}

std::string canonical_string(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
    }
    best = std::max(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (int b = 0; b < 6; ++b) x = x * 2 + bits[k + b];
    out += static_cast<char>(x + 63);
  }
  return out;
}

}  // namespace oracle
