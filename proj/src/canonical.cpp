#include "imlab/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "imlab/error.hpp"
#include "imlab/io.hpp"

namespace imlab {

namespace {

// Ordered partition of 0..n-1: cells are contiguous ranges of `elems`;
// `end[s]` is the end of the cell starting at s.
struct Partition {
  std::vector<int> elems;
  std::vector<int> end;
  int cells = 0;
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g)
      : g_(g), n_(g.order()), words_((static_cast<std::size_t>(g.order()) + 63) / 64), count_(g.order()) {}

  std::vector<Vertex> run() {
    Partition root;
    root.elems.resize(static_cast<std::size_t>(n_));
    std::iota(root.elems.begin(), root.elems.end(), 0);
    root.end.assign(static_cast<std::size_t>(n_), n_);
    root.cells = n_ > 0 ? 1 : 0;
    refine(root);
    std::vector<int> prefix;
    descend(root, prefix);
    std::vector<Vertex> position(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) position[best_elems_[i]] = i;
    return position;
  }

 private:
  void refine(Partition& p) {
    bool changed = true;
    while (changed && p.cells < n_) {
      changed = false;
      for (int s = 0; s < n_ && p.cells < n_; s = p.end[s]) {
        std::fill(count_.begin(), count_.end(), 0);
        for (int i = s; i < p.end[s]; ++i) {
          for (Vertex u : g_.neighbors(p.elems[i])) ++count_[u];
        }
        for (int c = 0; c < n_;) {
          const int e = p.end[c];
          if (e - c > 1) {
            auto first = p.elems.begin() + c;
            auto last = p.elems.begin() + e;
            std::sort(first, last, [&](int a, int b) {
              return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
            });
            int start = c;
            for (int i = c + 1; i <= e; ++i) {
              if (i == e || count_[p.elems[i]] != count_[p.elems[i - 1]]) {
                p.end[start] = i;
                if (i < e) {
                  ++p.cells;
                  changed = true;
                }
                start = i;
              }
            }
          }
          c = e;
        }
      }
    }
  }

  void individualize(Partition& p, int v) const {
    int c = 0;
    while (true) {
      const int e = p.end[c];
      auto it = std::find(p.elems.begin() + c, p.elems.begin() + e, v);
      if (it != p.elems.begin() + e) {
        std::iter_swap(p.elems.begin() + c, it);
        std::sort(p.elems.begin() + c + 1, p.elems.begin() + e);
        p.end[c] = c + 1;
        p.end[c + 1] = e;
        ++p.cells;
        return;
      }
      c = e;
    }
  }

  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void leaf(const Partition& p) {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[p.elems[i]] = i;
    std::vector<std::uint64_t> cert(static_cast<std::size_t>(n_) * words_, 0);
    for (int i = 0; i < n_; ++i) {
      for (Vertex w : g_.neighbors(p.elems[i])) {
        cert[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(pos[w] >> 6)] |=
            std::uint64_t{1} << (pos[w] & 63);
      }
    }
    if (!have_best_ || cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_elems_ = p.elems;
      have_best_ = true;
    } else if (cert == best_cert_) {
      std::vector<int> gamma(static_cast<std::size_t>(n_));
      for (int i = 0; i < n_; ++i) gamma[p.elems[i]] = best_elems_[i];
      generators_.push_back(std::move(gamma));
    }
  }

  void descend(const Partition& p, std::vector<int>& prefix) {
    if (p.cells == n_) {
      leaf(p);
      return;
    }
    int target = -1;
    int best_size = n_ + 1;
    for (int c = 0; c < n_; c = p.end[c]) {
      const int size = p.end[c] - c;
      if (size > 1 && size < best_size) {
        best_size = size;
        target = c;
      }
    }
    std::vector<int> members(p.elems.begin() + target, p.elems.begin() + p.end[target]);
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    for (int x : members) {
      if (!explored.empty()) {
        auto orbit = orbits_fixing(prefix);
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](int y) { return orbit[y] == orbit[x]; });
        if (equivalent) continue;
      }
      Partition child = p;
      individualize(child, x);
      refine(child);
      prefix.push_back(x);
      descend(child, prefix);
      prefix.pop_back();
      explored.push_back(x);
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  std::vector<int> count_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_cert_;
  std::vector<int> best_elems_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return b.build();
}

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm out;
  out.position = CanonSearch(g).run();
  out.graph = relabel(g, out.position);
  return out;
}

std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g).graph); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).graph == canonical_form(b).graph;
}

std::uint64_t pack_small(const Graph& g) {
  if (g.order() > 11) throw InvalidInput("pack_small: order above 11");
  std::uint64_t key = static_cast<std::uint64_t>(g.order()) << 56;
  for (auto [u, v] : g.edges()) key |= std::uint64_t{1} << (v * (v - 1) / 2 + u);
  return key;
}

Graph unpack_small(std::uint64_t key) {
  const int n = static_cast<int>(key >> 56);
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if ((key >> (v * (v - 1) / 2 + u)) & 1U) b.add_edge(u, v);
    }
  }
  return b.build();
}

}  // namespace imlab
