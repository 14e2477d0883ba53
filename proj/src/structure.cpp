#include "imlab/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "imlab/canonical.hpp"
#include "imlab/error.hpp"
#include "imlab/rng.hpp"

namespace imlab {

const char* to_string(SeesKind k) {
  switch (k) {
    case SeesKind::path:
      return "path";
    case SeesKind::claw:
      return "claw";
    case SeesKind::triangle:
      return "triangle";
  }
  return "?";
}

const char* to_string(FreenessMode m) {
  switch (m) {
    case FreenessMode::assume:
      return "assume";
    case FreenessMode::verify:
      return "verify";
    case FreenessMode::skip:
      return "skip";
  }
  return "?";
}

const char* to_string(FreenessStatus s) {
  switch (s) {
    case FreenessStatus::assumed:
      return "assumed";
    case FreenessStatus::verified_free:
      return "verified-free";
    case FreenessStatus::has_3pc:
      return "has-3pc";
    case FreenessStatus::unknown:
      return "unknown";
    case FreenessStatus::skipped:
      return "skipped";
  }
  return "?";
}

FreenessMode parse_freeness_mode(const std::string& text) {
  if (text == "assume") return FreenessMode::assume;
  if (text == "verify") return FreenessMode::verify;
  if (text == "skip") return FreenessMode::skip;
  throw InvalidInput("unknown 3PC-freeness mode '" + text + "'");
}

const char* to_string(SkeletonStatus s) {
  switch (s) {
    case SkeletonStatus::extracted:
      return "extracted";
    case SkeletonStatus::violation:
      return "violation";
    case SkeletonStatus::no_guarantee:
      return "no-guarantee";
  }
  return "?";
}

namespace {

const char* const kXYZ[3] = {"X", "Y", "Z"};

bool seq_sees(const Graph& g, const std::vector<Vertex>& seq, std::size_t from, std::size_t to, const VertexSet& s) {
  for (std::size_t i = from; i < to; ++i) {
    if (vertex_sees(g, seq[i], s)) return true;
  }
  return false;
}

// Consecutive vertices adjacent, no other edges, all distinct.
bool is_chordless_path(const Graph& g, const std::vector<Vertex>& p) {
  if (p.empty()) return false;
  for (Vertex v : p) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] == p[j]) return false;
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
    }
  }
  return true;
}

bool inside(const std::vector<Vertex>& p, const VertexSet& s) {
  return std::all_of(p.begin(), p.end(), [&](Vertex v) { return set_contains(s, v); });
}

std::vector<Vertex> reversed(std::vector<Vertex> p) {
  std::reverse(p.begin(), p.end());
  return p;
}

// Shortest path inside `allowed` from a source to a target, lexicographically
// smallest among the shortest ones. Empty if none.
std::vector<Vertex> shortest_path(const Graph& g, const std::vector<char>& allowed, const std::vector<char>& source,
                                  const std::vector<char>& target) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (allowed[v] && target[v]) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : g.neighbors(queue[head])) {
      if (allowed[w] && dist[w] < 0) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
    }
  }
  Vertex start = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (allowed[v] && source[v] && dist[v] >= 0 && (start < 0 || dist[v] < dist[start])) start = v;
  }
  if (start < 0) return {};
  std::vector<Vertex> p{start};
  while (dist[p.back()] > 0) {
    for (Vertex w : g.neighbors(p.back())) {
      if (allowed[w] && dist[w] == dist[p.back()] - 1) {
        p.push_back(w);
        break;
      }
    }
  }
  return p;
}

std::vector<char> flags(int n, const VertexSet& s) {
  std::vector<char> f(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) f[v] = 1;
  return f;
}

std::vector<char> seer_flags(const Graph& g, const VertexSet& within, const VertexSet& target) {
  std::vector<char> f(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : within) f[v] = vertex_sees(g, v, target) ? 1 : 0;
  return f;
}

// Every chordless path in g[W] that starts at a vertex seeing `left`, has no
// later vertex seeing `left`, and stops at its first vertex seeing `right`.
// f returns false to stop. Returns false if stopped or out of budget.
bool for_each_end_path(const Graph& g, const VertexSet& w, const VertexSet& left, const VertexSet& right,
                       const std::function<bool(const std::vector<Vertex>&)>& f, std::uint64_t& budget) {
  const auto in_w = flags(g.order(), w);
  const auto sees_l = seer_flags(g, w, left);
  const auto sees_r = seer_flags(g, w, right);
  std::vector<int> cnt(static_cast<std::size_t>(g.order()), 0);
  std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> path;
  bool stop = false;
  auto push = [&](Vertex x) {
    path.push_back(x);
    on[x] = 1;
    for (Vertex y : g.neighbors(x)) ++cnt[y];
  };
  auto pop = [&]() {
    const Vertex x = path.back();
    for (Vertex y : g.neighbors(x)) --cnt[y];
    on[x] = 0;
    path.pop_back();
  };
  auto extend = [&](auto&& self) -> void {
    if (budget == 0) {
      stop = true;
      return;
    }
    --budget;
    if (sees_r[path.back()]) {
      if (!f(path)) stop = true;
      return;
    }
    for (Vertex x : g.neighbors(path.back())) {
      if (!in_w[x] || on[x] || sees_l[x] || cnt[x] != 1) continue;
      push(x);
      self(self);
      pop();
      if (stop) return;
    }
  };
  for (Vertex s : w) {
    if (!sees_l[s]) continue;
    push(s);
    extend(extend);
    pop();
    if (stop) break;
  }
  return !stop;
}

struct Named {
  std::string name;
  const VertexSet* set;
};

void require_basic(const Graph& g, const std::vector<Named>& sets, const char* who) {
  for (const auto& s : sets) {
    for (Vertex v : *s.set) {
      if (!g.contains(v)) {
        throw InvalidInput(std::string(who) + ": set " + s.name + " has invalid vertex " + std::to_string(v));
      }
    }
    if (!std::is_sorted(s.set->begin(), s.set->end())) {
      throw InvalidInput(std::string(who) + ": set " + s.name + " is not sorted");
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!sets_disjoint(*sets[i].set, *sets[j].set)) {
        throw PreconditionError(std::string(who) + ": hypothesis failed: " + sets[i].name + " and " + sets[j].name +
                                " are not disjoint");
      }
    }
  }
}

void require_connected(const Graph& g, const Named& s, const char* who) {
  if (s.set->empty() || !is_connected(g, *s.set)) {
    throw PreconditionError(std::string(who) + ": hypothesis failed: " + s.name + " is not connected");
  }
}

void require_sees_all(const Graph& g, const Named& a, const Triple& t, const char* who) {
  for (int i = 0; i < 3; ++i) {
    if (!sees(g, *a.set, t[i])) {
      throw PreconditionError(std::string(who) + ": hypothesis failed: " + a.name + " does not see " + kXYZ[i]);
    }
  }
}

void require_anticomplete(const Graph& g, const std::vector<Named>& sets, const char* who) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!is_anticomplete(g, *sets[i].set, *sets[j].set)) {
        throw PreconditionError(std::string(who) + ": hypothesis failed: " + sets[i].name + " and " + sets[j].name +
                                " are not anticomplete");
      }
    }
  }
}

// Hypotheses shared by the path lemmas: disjoint connected sets, the triple
// pairwise anticomplete, the A-sets pairwise anticomplete and each seeing all
// three.
void require_lemma_setup(const Graph& g, const std::vector<Named>& as, const Triple& t, const char* who) {
  std::vector<Named> all = as;
  std::vector<Named> xyz;
  for (int i = 0; i < 3; ++i) xyz.push_back({kXYZ[i], &t[i]});
  all.insert(all.end(), xyz.begin(), xyz.end());
  require_basic(g, all, who);
  for (const auto& s : all) require_connected(g, s, who);
  require_anticomplete(g, xyz, who);
  require_anticomplete(g, as, who);
  for (const auto& a : as) require_sees_all(g, a, t, who);
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<int> path_centers(const Graph& g, const std::vector<Vertex>& path, const Triple& t) {
  std::vector<int> out;
  if (!is_chordless_path(g, path)) return out;
  for (int c = 0; c < 3; ++c) {
    const int l = c == 0 ? 1 : 0;
    const int r = c == 2 ? 1 : 2;
    for (int dir = 0; dir < 2; ++dir) {
      const auto p = dir == 0 ? path : reversed(path);
      const std::size_t k = p.size();
      const bool ok = vertex_sees(g, p.front(), t[l]) && vertex_sees(g, p.back(), t[r]) && seq_sees(g, p, 0, k, t[c]) &&
                      !seq_sees(g, p, 1, k, t[l]) && !seq_sees(g, p, 0, k - 1, t[r]);
      if (ok) {
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::string check_sees_type(const Graph& g, const VertexSet& a, const Triple& t, const SeesTypeWitness& w) {
  auto check_path = [&](const std::vector<Vertex>& p) -> std::string {
    if (!is_chordless_path(g, p)) return "not a chordless path";
    if (!inside(p, a)) return "path leaves A";
    const auto c = path_centers(g, p, t);
    if (c.empty()) return "path certifies no centre";
    if (c != w.centers) return "reported centres differ from certified ones";
    return {};
  };
  switch (w.kind) {
    case SeesKind::path:
      return check_path(w.path);
    case SeesKind::claw: {
      VertexSet all;
      for (int i = 0; i < 3; ++i) {
        const auto& leg = w.legs[i];
        if (leg.empty() || leg.front() != w.apex) return "claw leg does not start at the apex";
        if (!is_chordless_path(g, leg) || !inside(leg, a)) return "claw leg is not a chordless path in A";
      }
      std::array<VertexSet, 3> tails;
      for (int i = 0; i < 3; ++i) tails[i] = make_set(std::vector<Vertex>(w.legs[i].begin() + 1, w.legs[i].end()));
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (!sets_disjoint(tails[i], tails[j])) return "claw legs share a vertex besides the apex";
          if (!is_anticomplete(g, tails[i], tails[j])) return "claw legs are not anticomplete off the apex";
        }
      }
      for (const auto& leg : w.legs) all = set_union(all, make_set(leg));
      for (int i = 0; i < 3; ++i) {
        const Vertex end = w.legs[i].back();
        if (!vertex_sees(g, end, t[i])) return std::string("claw leg end does not see ") + kXYZ[i];
        for (Vertex v : all) {
          if (v != end && vertex_sees(g, v, t[i])) return std::string("claw sees ") + kXYZ[i] + " off its leg end";
        }
      }
      const bool degenerate = std::any_of(w.legs.begin(), w.legs.end(), [](const auto& l) { return l.size() == 1; });
      if (degenerate) {
        if (w.path.empty()) return "claw with apex at a leg end must report the path-type overlap";
        return check_path(w.path);
      }
      return {};
    }
    case SeesKind::triangle: {
      std::array<VertexSet, 3> sets;
      VertexSet all;
      for (int i = 0; i < 3; ++i) {
        if (!is_chordless_path(g, w.legs[i]) || !inside(w.legs[i], a)) {
          return "triangle leg is not a chordless path in A";
        }
        sets[i] = make_set(w.legs[i]);
        all = set_union(all, sets[i]);
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (!sets_disjoint(sets[i], sets[j])) return "triangle legs are not vertex-disjoint";
          for (Vertex u : w.legs[i]) {
            for (Vertex v : w.legs[j]) {
              const bool corner = u == w.legs[i].front() && v == w.legs[j].front();
              if (g.adjacent(u, v) != corner) return "triangle legs have an edge other than the triangle";
            }
          }
        }
      }
      for (int i = 0; i < 3; ++i) {
        const Vertex end = w.legs[i].back();
        if (!vertex_sees(g, end, t[i])) return std::string("triangle leg end does not see ") + kXYZ[i];
        for (Vertex v : all) {
          if (v != end && vertex_sees(g, v, t[i])) return std::string("triangle sees ") + kXYZ[i] + " off its leg end";
        }
      }
      return {};
    }
  }
  return "unknown kind";
}

SeesTypeWitness classify_type(const Graph& g, const VertexSet& a, const Triple& t) {
  const char* who = "classify_type";
  std::vector<Named> all{{"A", &a}};
  for (int i = 0; i < 3; ++i) all.push_back({kXYZ[i], &t[i]});
  require_basic(g, all, who);
  require_connected(g, all[0], who);
  require_sees_all(g, all[0], t, who);

  const int n = g.order();
  const auto in_a = flags(n, a);
  const auto sx = seer_flags(g, a, t[0]);
  const auto sy = seer_flags(g, a, t[1]);
  const auto sz = seer_flags(g, a, t[2]);

  auto finish = [&](SeesTypeWitness w) {
    if (!w.path.empty()) w.centers = path_centers(g, w.path, t);
    if (auto why = check_sees_type(g, a, t, w); !why.empty()) {
      throw std::logic_error("classify_type produced an invalid certificate: " + why);
    }
    return w;
  };
  auto path_witness = [&](std::vector<Vertex> p) {
    SeesTypeWitness w;
    w.kind = SeesKind::path;
    w.path = std::move(p);
    return finish(std::move(w));
  };

  std::vector<Vertex> p = shortest_path(g, in_a, sx, sz);
  if (seq_sees(g, p, 0, p.size(), t[1])) return path_witness(p);

  std::vector<Vertex> q;
  {
    std::vector<char> allowed = in_a;
    for (Vertex v : p) allowed[v] = 0;
    std::vector<char> touches(static_cast<std::size_t>(n), 0);
    for (Vertex v : a) touches[v] = allowed[v] && vertex_sees(g, v, make_set(p));
    q = shortest_path(g, allowed, sy, touches);
    if (q.empty()) throw std::logic_error("classify_type: no connection from the Y side");
  }

  while (true) {
    const bool qx = seq_sees(g, q, 0, q.size(), t[0]);
    const bool qz = seq_sees(g, q, 0, q.size(), t[2]);
    if (qx && qz) {
      std::size_t u = 0;
      while (!(seq_sees(g, q, 0, u + 1, t[0]) && seq_sees(g, q, 0, u + 1, t[2]))) ++u;
      return path_witness(std::vector<Vertex>(q.begin(), q.begin() + static_cast<long>(u) + 1));
    }
    const Vertex yp = q.back();
    std::size_t ia = p.size();
    std::size_t ib = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (g.adjacent(yp, p[i])) {
        ia = std::min(ia, i);
        ib = i;
      }
    }
    if (qx) {
      std::vector<Vertex> r = q;
      r.insert(r.end(), p.begin() + static_cast<long>(ib), p.end());
      return path_witness(r);
    }
    if (qz) {
      std::vector<Vertex> r = q;
      for (std::size_t i = ia + 1; i-- > 0;) r.push_back(p[i]);
      return path_witness(r);
    }
    if (ia == ib) {
      SeesTypeWitness w;
      w.kind = SeesKind::claw;
      w.apex = p[ia];
      w.legs[0] = reversed(std::vector<Vertex>(p.begin(), p.begin() + static_cast<long>(ia) + 1));
      w.legs[1] = {p[ia]};
      for (std::size_t i = q.size(); i-- > 0;) w.legs[1].push_back(q[i]);
      w.legs[2] = std::vector<Vertex>(p.begin() + static_cast<long>(ia), p.end());
      if (ia == 0 || ia + 1 == p.size()) {
        w.path = q;
        if (ia == 0) {
          w.path.insert(w.path.end(), p.begin(), p.end());
        } else {
          w.path.insert(w.path.end(), p.rbegin(), p.rend());
        }
      }
      return finish(std::move(w));
    }
    if (ib == ia + 1) {
      SeesTypeWitness w;
      w.kind = SeesKind::triangle;
      w.legs[0] = reversed(std::vector<Vertex>(p.begin(), p.begin() + static_cast<long>(ia) + 1));
      w.legs[1] = reversed(q);
      w.legs[2] = std::vector<Vertex>(p.begin() + static_cast<long>(ib), p.end());
      return finish(std::move(w));
    }
    std::vector<Vertex> shortcut(p.begin(), p.begin() + static_cast<long>(ia) + 1);
    shortcut.push_back(yp);
    shortcut.insert(shortcut.end(), p.begin() + static_cast<long>(ib), p.end());
    if (q.size() == 1) return path_witness(shortcut);
    p = std::move(shortcut);
    q.pop_back();
  }
}

CentersResult path_type_centers(const Graph& g, const VertexSet& a, const Triple& t, std::uint64_t budget) {
  CentersResult res;
  for (int c = 0; c < 3; ++c) {
    const int l = c == 0 ? 1 : 0;
    const int r = c == 2 ? 1 : 2;
    bool hit = false;
    const bool complete = for_each_end_path(
        g, a, t[l], t[r],
        [&](const std::vector<Vertex>& p) {
          hit = seq_sees(g, p, 0, p.size(), t[c]);
          return !hit;
        },
        budget);
    if (hit) {
      res.centers.push_back(c);
    } else if (!complete) {
      res.status = SearchStatus::indeterminate;
    }
  }
  return res;
}

Freeness establish_freeness(const Graph& g, const VertexSet& support, FreenessMode mode, std::uint64_t budget) {
  Freeness f;
  if (mode == FreenessMode::assume) {
    f.status = FreenessStatus::assumed;
    return f;
  }
  if (mode == FreenessMode::skip) {
    f.status = FreenessStatus::skipped;
    return f;
  }
  const auto r = induced_subgraph(g, support);
  DetectOptions opt;
  opt.budget = budget;
  auto res = contains_3pc(r.graph, opt);
  if (res.found()) {
    f.status = FreenessStatus::has_3pc;
    for (auto& p : res.witness->paths) {
      for (auto& v : p) v = r.new_to_old[v];
    }
    f.witness = std::move(res.witness);
  } else {
    f.status = res.status == SearchStatus::not_found ? FreenessStatus::verified_free : FreenessStatus::unknown;
  }
  return f;
}

OnePathVerdict check_one_path(const Graph& g, const VertexSet& a, const VertexSet& b, const Triple& t,
                              FreenessMode mode) {
  require_lemma_setup(g, {{"A", &a}, {"B", &b}}, t, "check_one_path");
  OnePathVerdict v;
  v.host = establish_freeness(g, set_union(set_union(a, b), set_union(set_union(t[0], t[1]), t[2])), mode);
  v.tau_a = path_type_centers(g, a, t).centers;
  v.tau_b = path_type_centers(g, b, t).centers;
  v.both_path = !v.tau_a.empty() && !v.tau_b.empty();
  v.violation = !v.both_path && guarantee_applies(v.host.status);
  return v;
}

AllPathVerdict check_all_path_common_center(const Graph& g, const std::vector<VertexSet>& sets, const Triple& t,
                                            FreenessMode mode) {
  if (sets.size() < 2) throw PreconditionError("check_all_path_common_center: needs at least two sets");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sets.size(); ++i) names.push_back("A" + std::to_string(i + 1));
  std::vector<Named> as;
  for (std::size_t i = 0; i < sets.size(); ++i) as.push_back({names[i], &sets[i]});
  require_lemma_setup(g, as, t, "check_all_path_common_center");
  AllPathVerdict v;
  VertexSet support = set_union(set_union(t[0], t[1]), t[2]);
  for (const auto& s : sets) support = set_union(support, s);
  v.host = establish_freeness(g, support, mode);
  v.all_path = true;
  v.common = {0, 1, 2};
  for (const auto& s : sets) {
    v.taus.push_back(path_type_centers(g, s, t).centers);
    if (v.taus.back().empty()) v.all_path = false;
    v.common = intersect(v.common, v.taus.back());
  }
  v.linear_order = true;
  for (std::size_t i = 0; i < v.taus.size(); ++i) {
    for (std::size_t j = i + 1; j < v.taus.size(); ++j) {
      const auto both = intersect(v.taus[i], v.taus[j]);
      if (both != v.taus[i] && both != v.taus[j]) v.linear_order = false;
    }
  }
  v.violation = (!v.all_path || v.common.empty() || !v.linear_order) && guarantee_applies(v.host.status);
  return v;
}

bool is_minimal_seer(const Graph& g, const VertexSet& a, const Triple& t) {
  for (Vertex v : a) {
    const auto rest = set_difference(a, {v});
    if (rest.empty()) continue;
    const auto r = induced_subgraph(g, rest);
    for (const auto& comp : connected_components(r.graph)) {
      VertexSet c;
      for (Vertex x : comp) c.push_back(r.new_to_old[x]);
      c = make_set(std::move(c));
      if (sees(g, c, t[0]) && sees(g, c, t[1]) && sees(g, c, t[2])) return false;
    }
  }
  return true;
}

std::vector<std::string> check_skeleton(const Graph& g, const Triple& abc, const Triple& xyz, const K33Skeleton& s) {
  std::vector<std::string> out;
  const std::array<const std::vector<Vertex>*, 3> abc_paths{&s.a_path, &s.b_path, &s.c_path};
  const std::array<const std::vector<Vertex>*, 3> pqr{&s.p_path, &s.q_path, &s.r_path};
  const char* abc_names[3] = {"A'", "B'", "C'"};
  const char* pqr_names[3] = {"P", "Q", "R"};

  auto is_perm = [](const std::array<int, 3>& r) {
    std::array<int, 3> c = r;
    std::sort(c.begin(), c.end());
    return c == std::array<int, 3>{0, 1, 2};
  };
  bool shape_ok = is_perm(s.abc_role) && is_perm(s.xyz_role);
  if (!shape_ok) {
    out.push_back("roles are not permutations");
    return out;
  }
  for (int i = 0; i < 3; ++i) {
    if (!is_chordless_path(g, *abc_paths[i]) || make_set(*abc_paths[i]) != abc[s.abc_role[i]]) {
      out.push_back(std::string("bullet 1: ") + abc_names[i] + " is not a chordless path equal to its input set");
      shape_ok = false;
    }
    if (!is_chordless_path(g, *pqr[i]) || !inside(*pqr[i], xyz[s.xyz_role[i]])) {
      out.push_back(std::string("bullet 2: ") + pqr_names[i] + " is not a chordless path inside its input set");
      shape_ok = false;
    }
  }
  if (!shape_ok) return out;
  VertexSet used;
  std::size_t total = 0;
  for (const auto* p : {&s.a_path, &s.b_path, &s.c_path, &s.p_path, &s.q_path, &s.r_path}) {
    used = set_union(used, make_set(*p));
    total += p->size();
  }
  if (used.size() != total) {
    out.push_back("the six paths are not vertex-disjoint");
    return out;
  }

  std::vector<Vertex> h = s.a_path;
  h.insert(h.end(), s.r_path.begin(), s.r_path.end());
  h.insert(h.end(), s.c_path.rbegin(), s.c_path.rend());
  h.insert(h.end(), s.p_path.rbegin(), s.p_path.rend());
  if (!is_hole(g, h) || h != s.hole) out.push_back("bullet 3: a A' a' r R r' c' C' c p' P p is not a hole");

  auto tail = [](const std::vector<Vertex>& p, bool drop_front) {
    return make_set(drop_front ? std::vector<Vertex>(p.begin() + 1, p.end()) : std::vector<Vertex>(p.begin(), p.end() - 1));
  };
  const VertexSet bp = make_set(s.b_path), qp = make_set(s.q_path);
  const VertexSet pp = make_set(s.p_path), rp = make_set(s.r_path);
  const VertexSet ap = make_set(s.a_path), cp = make_set(s.c_path);
  if (!is_anticomplete(g, tail(s.b_path, true), pp)) out.push_back("bullet 4: B' \\ b sees P");
  if (!is_anticomplete(g, tail(s.b_path, false), rp)) out.push_back("bullet 4: B' \\ b' sees R");
  if (!is_anticomplete(g, tail(s.q_path, true), ap)) out.push_back("bullet 4: Q \\ q sees A'");
  if (!is_anticomplete(g, tail(s.q_path, false), cp)) out.push_back("bullet 4: Q \\ q' sees C'");

  if (s.b_path.size() > 2 || s.q_path.size() > 2) out.push_back("bullet 5: B' or Q has length above one");

  auto count_in = [&](Vertex v, const VertexSet& set) {
    int c = 0;
    for (Vertex w : set) c += g.adjacent(v, w) ? 1 : 0;
    return c;
  };
  if (count_in(s.b_path.front(), pp) < 3) out.push_back("bullet 6: b has fewer than three neighbours in P");
  if (count_in(s.b_path.back(), rp) < 3) out.push_back("bullet 6: b' has fewer than three neighbours in R");
  if (count_in(s.q_path.front(), ap) < 3) out.push_back("bullet 6: q has fewer than three neighbours in A'");
  if (count_in(s.q_path.back(), cp) < 3) out.push_back("bullet 6: q' has fewer than three neighbours in C'");

  const auto bq = induced_subgraph(g, set_union(bp, qp)).graph;
  if (!is_complete(g, bp, qp) && !(bq.order() == 4 && bq.size() == 5)) {
    out.push_back("bullet 7: B' is not complete to Q and B' u Q is not four vertices with five edges");
  }
  return out;
}

namespace {

// Vertex order of g[s] as a path with the front seeing `first`; empty if g[s]
// is not a path or no end works.
std::vector<Vertex> orient_path(const Graph& g, const VertexSet& s, const VertexSet& first, const VertexSet& last) {
  const auto r = induced_subgraph(g, s);
  const Graph& h = r.graph;
  if (!is_connected(h) || h.size() + 1 != s.size()) return {};
  std::vector<Vertex> ends;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 2) return {};
    if (h.degree(v) <= 1) ends.push_back(v);
  }
  for (Vertex e : ends) {
    std::vector<Vertex> seq{e};
    Vertex prev = -1;
    while (seq.size() < s.size()) {
      for (Vertex w : h.neighbors(seq.back())) {
        if (w != prev) {
          prev = seq.back();
          seq.push_back(w);
          break;
        }
      }
    }
    for (auto& v : seq) v = r.new_to_old[v];
    const std::size_t k = seq.size();
    if (vertex_sees(g, seq.front(), first) && vertex_sees(g, seq.back(), last) && !seq_sees(g, seq, 1, k, first) &&
        !seq_sees(g, seq, 0, k - 1, last)) {
      return seq;
    }
  }
  return {};
}

// Shortest, then lexicographically smallest, defining path in g[w] with ends
// seeing `left` and `right` and the path seeing `centre`.
std::vector<Vertex> best_center_path(const Graph& g, const VertexSet& w, const VertexSet& left, const VertexSet& right,
                                     const VertexSet& centre, std::uint64_t& budget) {
  std::vector<Vertex> best;
  for_each_end_path(
      g, w, left, right,
      [&](const std::vector<Vertex>& p) {
        if (!seq_sees(g, p, 0, p.size(), centre)) return true;
        if (best.empty() || p.size() < best.size() || (p.size() == best.size() && p < best)) best = p;
        return true;
      },
      budget);
  return best;
}

}  // namespace

SkeletonResult extract_k33_skeleton(const Graph& g, const Triple& abc, const Triple& xyz, FreenessMode mode) {
  const char* who = "extract_k33_skeleton";
  const char* abc_names[3] = {"A", "B", "C"};
  std::vector<Named> as;
  for (int i = 0; i < 3; ++i) as.push_back({abc_names[i], &abc[i]});
  require_lemma_setup(g, as, xyz, who);
  for (int i = 0; i < 3; ++i) {
    if (!is_minimal_seer(g, abc[i], xyz)) {
      throw PreconditionError(std::string(who) + ": hypothesis failed: a connected proper subset of " + abc_names[i] +
                              " sees X, Y and Z");
    }
  }
  SkeletonResult res;
  VertexSet support;
  for (int i = 0; i < 3; ++i) support = set_union(support, set_union(abc[i], xyz[i]));
  res.host = establish_freeness(g, support, mode);
  const SkeletonStatus failure = guarantee_applies(res.host.status) ? SkeletonStatus::violation : SkeletonStatus::no_guarantee;
  res.status = failure;

  std::vector<int> common_y{0, 1, 2};
  std::vector<int> common_b{0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    common_y = intersect(common_y, path_type_centers(g, abc[i], xyz).centers);
    common_b = intersect(common_b, path_type_centers(g, xyz[i], abc).centers);
  }
  if (common_y.empty()) res.failures.push_back("A, B, C have no common centre among X, Y, Z");
  if (common_b.empty()) res.failures.push_back("X, Y, Z have no common centre among A, B, C");

  std::uint64_t budget = kDefaultBudget;
  for (int yc : common_y) {
    for (int bc : common_b) {
      const int ai = bc == 0 ? 1 : 0;
      const int ci = bc == 2 ? 1 : 2;
      const int xi = yc == 0 ? 1 : 0;
      const int zi = yc == 2 ? 1 : 2;
      K33Skeleton s;
      s.abc_role = {ai, bc, ci};
      s.xyz_role = {xi, yc, zi};
      s.a_path = orient_path(g, abc[ai], xyz[xi], xyz[zi]);
      s.b_path = orient_path(g, abc[bc], xyz[xi], xyz[zi]);
      s.c_path = orient_path(g, abc[ci], xyz[xi], xyz[zi]);
      s.p_path = best_center_path(g, xyz[xi], abc[ai], abc[ci], abc[bc], budget);
      s.q_path = best_center_path(g, xyz[yc], abc[ai], abc[ci], abc[bc], budget);
      s.r_path = best_center_path(g, xyz[zi], abc[ai], abc[ci], abc[bc], budget);
      std::vector<std::string> fails;
      if (s.a_path.empty() || s.b_path.empty() || s.c_path.empty()) {
        fails.push_back("bullet 1: an input set is not a path from X' to Z'");
      }
      if (s.p_path.empty() || s.q_path.empty() || s.r_path.empty()) {
        fails.push_back("bullet 2: no defining path P, Q or R inside X', Y', Z'");
      }
      if (fails.empty()) {
        s.hole = s.a_path;
        s.hole.insert(s.hole.end(), s.r_path.begin(), s.r_path.end());
        s.hole.insert(s.hole.end(), s.c_path.rbegin(), s.c_path.rend());
        s.hole.insert(s.hole.end(), s.p_path.rbegin(), s.p_path.rend());
        fails = check_skeleton(g, abc, xyz, s);
      }
      if (fails.empty()) {
        res.status = SkeletonStatus::extracted;
        res.skeleton = std::move(s);
        res.failures.clear();
        for (const auto& set : abc) res.small_sets += set.size() <= 2 ? 1 : 0;
        return res;
      }
      if (res.failures.empty()) res.failures = std::move(fails);
    }
  }
  for (const auto& set : abc) res.small_sets += set.size() <= 2 ? 1 : 0;
  return res;
}

PlantedSkeleton plant_k33_skeleton(std::uint64_t seed, bool pendants) {
  const Rng root(seed);
  PlantedSkeleton out;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    GraphBuilder b(0);
    auto make_path = [&](int len) {
      std::vector<Vertex> p;
      for (int i = 0; i < len; ++i) {
        p.push_back(b.add_vertex());
        if (i > 0) b.add_edge(p[i - 1], p[i]);
      }
      return p;
    };
    std::vector<Vertex> ap = make_path(rng.range(5, 7));
    std::vector<Vertex> rp = make_path(rng.range(5, 7));
    std::vector<Vertex> cp = make_path(rng.range(5, 7));
    std::vector<Vertex> pp = make_path(rng.range(5, 7));
    b.add_edge(ap.back(), rp.front());
    b.add_edge(rp.back(), cp.back());
    b.add_edge(cp.front(), pp.back());
    b.add_edge(pp.front(), ap.front());
    // A consecutive run of 3 or 4 interior vertices.
    auto attach = [&](Vertex v, const std::vector<Vertex>& p) {
      const int size = static_cast<int>(p.size());
      const int len = rng.range(3, std::min(4, size - 2));
      const int start = rng.range(1, size - 1 - len);
      for (int i = start; i < start + len; ++i) b.add_edge(v, p[i]);
    };
    std::vector<Vertex> bp = make_path(rng.range(1, 2));
    std::vector<Vertex> qp = make_path(rng.range(1, 2));
    attach(bp.front(), pp);
    attach(bp.back(), rp);
    attach(qp.front(), ap);
    attach(qp.back(), cp);
    if (bp.size() == 2 && qp.size() == 2 && rng.chance(0.5)) {
      const int skip = rng.range(0, 3);
      for (int i = 0; i < 4; ++i) {
        if (i != skip) b.add_edge(bp[i / 2], qp[i % 2]);
      }
    } else {
      for (Vertex x : bp) {
        for (Vertex y : qp) b.add_edge(x, y);
      }
    }
    std::array<VertexSet, 3> xyz_sets{make_set(pp), make_set(qp), make_set(rp)};
    if (pendants) {
      const std::array<const std::vector<Vertex>*, 3> hosts{&pp, &qp, &rp};
      for (int i = 0; i < 3; ++i) {
        if (!rng.chance(0.5)) continue;
        const auto& h = *hosts[i];
        // Interior attachment keeps the defining path unique.
        const Vertex at = h.size() > 2 ? h[static_cast<std::size_t>(rng.range(1, static_cast<int>(h.size()) - 2))]
                                       : h[rng.below(h.size())];
        const Vertex x = b.add_vertex();
        b.add_edge(at, x);
        xyz_sets[i].push_back(x);
      }
    }
    const Graph raw = b.build();
    if (contains_3pc(raw).status != SearchStatus::not_found) {
      ++out.rejected;
      continue;
    }

    std::vector<Vertex> perm(static_cast<std::size_t>(raw.order()));
    for (Vertex v = 0; v < raw.order(); ++v) perm[v] = v;
    rng.shuffle(perm);
    auto map = [&](std::vector<Vertex> p) {
      for (auto& v : p) v = perm[v];
      return p;
    };
    std::vector<int> pa{0, 1, 2};
    std::vector<int> px{0, 1, 2};
    rng.shuffle(pa);
    rng.shuffle(px);
    out.graph = relabel(raw, perm);
    const std::array<const std::vector<Vertex>*, 3> abc_paths{&ap, &bp, &cp};
    for (int i = 0; i < 3; ++i) {
      out.abc[pa[i]] = make_set(map(*abc_paths[i]));
      VertexSet s;
      for (Vertex v : xyz_sets[i]) s.push_back(perm[v]);
      out.xyz[px[i]] = make_set(std::move(s));
    }

    // Expected skeleton in the extraction's convention: A' and X' are the
    // lower-indexed of their pairs.
    K33Skeleton e;
    e.a_path = map(ap);
    e.b_path = map(bp);
    e.c_path = map(cp);
    e.p_path = map(pp);
    e.q_path = map(qp);
    e.r_path = map(rp);
    e.abc_role = {pa[0], pa[1], pa[2]};
    e.xyz_role = {px[0], px[1], px[2]};
    if (e.abc_role[0] > e.abc_role[2]) {
      std::swap(e.a_path, e.c_path);
      std::swap(e.abc_role[0], e.abc_role[2]);
      e.p_path = reversed(e.p_path);
      e.q_path = reversed(e.q_path);
      e.r_path = reversed(e.r_path);
    }
    if (e.xyz_role[0] > e.xyz_role[2]) {
      std::swap(e.p_path, e.r_path);
      std::swap(e.xyz_role[0], e.xyz_role[2]);
      e.a_path = reversed(e.a_path);
      e.b_path = reversed(e.b_path);
      e.c_path = reversed(e.c_path);
    }
    e.hole = e.a_path;
    e.hole.insert(e.hole.end(), e.r_path.begin(), e.r_path.end());
    e.hole.insert(e.hole.end(), e.c_path.rbegin(), e.c_path.rend());
    e.hole.insert(e.hole.end(), e.p_path.rbegin(), e.p_path.rend());
    out.expected = std::move(e);
    return out;
  }
  throw std::runtime_error("plant_k33_skeleton: no 3PC-free instance found");
}

}  // namespace imlab
