#include "imlab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "imlab/detectors.hpp"
#include "imlab/error.hpp"
#include "imlab/generators.hpp"
#include "imlab/io.hpp"
#include "imlab/rng.hpp"

namespace imlab {

using json = nlohmann::json;

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{
      "thm-134-lemmas", "thm-k34-theta-triangle", "thm-k34-3pc", "lem-55",       "lem-subk23im",    "lem-girthtree",
      "lem-onepath",    "lem-allpath",            "lem-exact1",  "tightness-k33", "conjecture-probe"};
  return ids;
}

int HarnessReport::exit_code() const {
  if (refused) return 2;
  return violations.empty() ? 0 : 1;
}

json to_json(const HarnessReport& r, bool with_timing) {
  json j;
  j["schema"] = kReportSchema;
  j["suite"] = r.suite;
  if (!r.target.empty()) j["target"] = r.target;
  j["corpus"] = r.corpus;
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["processed"] = r.processed;
  j["counters"] = r.counters;
  j["violations"] = r.violations;
  j["indeterminates"] = r.indeterminates;
  j["finds"] = r.finds;
  j["outcome"] = r.outcome;
  j["message"] = r.message;
  j["refused"] = r.refused;
  if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

namespace {

json witness_cert(const ThreePCWitness& w) {
  return {{"type", "3pc"}, {"kind", to_string(w.kind)}, {"paths", w.paths}};
}

json model_cert(const BranchModel& m, const std::string& pattern, Relation rel = Relation::induced_minor) {
  return {{"type", "model"},
          {"pattern", pattern},
          {"pattern_graph6", emit_graph6(m.pattern)},
          {"relation", to_string(rel)},
          {"branch_sets", m.branch_sets}};
}

json absent_cert(const std::string& what) { return {{"type", "absent"}, {"what", what}}; }

json entry(std::int64_t item, const Graph& g, const std::string& reason) {
  return {{"item", item}, {"graph6", emit_graph6(g)}, {"reason", reason}, {"certificates", json::array()}};
}

struct Ctx {
  const SuiteSpec& spec;
  HarnessReport& rep;
  Rng root;

  void count(const std::string& key, std::int64_t by = 1) {
    rep.counters[key] = rep.counters.value(key, std::int64_t{0}) + by;
  }
  DetectOptions detect() const {
    DetectOptions o;
    o.budget = spec.budget;
    return o;
  }
  SearchOptions search() const {
    SearchOptions o;
    o.budget = spec.budget;
    return o;
  }
  MinimizeOptions minimize() const {
    MinimizeOptions o;
    o.budget = spec.budget;
    return o;
  }
  Rng item_rng(std::int64_t i) const { return root.split(static_cast<std::uint64_t>(i)); }
  void indeterminate(std::int64_t item, const Graph& g, const std::string& reason) {
    rep.indeterminates.push_back({{"item", item}, {"graph6", emit_graph6(g)}, {"reason", reason}});
  }
};

int pick(int value, int fallback) { return value < 0 ? fallback : value; }

void require_no_files(const SuiteSpec& spec) {
  if (!spec.corpus.empty()) {
    throw InvalidInput("suite " + spec.suite + " runs on generated instances only; --corpus is not supported");
  }
}

// Exhaustive connected graphs, then seeded samples, then external graphs.
void for_corpus(Ctx& c, int min_n, int max_n, int samples, const std::function<Graph(Rng&)>& sample,
                const std::function<void(std::int64_t, const Graph&)>& f) {
  std::int64_t item = 0;
  std::int64_t exhaustive = 0;
  for (int n = std::max(1, min_n); n <= max_n; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      f(item++, g);
      ++exhaustive;
    }
  }
  for (int i = 0; i < samples; ++i) {
    Rng r = c.item_rng(item);
    const Graph g = sample(r);
    f(item++, g);
  }
  for (const auto& g : c.spec.corpus) f(item++, g);
  c.rep.corpus["exhaustive"] = {{"connected", true}, {"min_n", min_n}, {"max_n", max_n}, {"count", exhaustive}};
  c.rep.corpus["samples"] = {{"count", samples}};
  c.rep.corpus["files"] = {{"label", c.spec.corpus_label}, {"count", c.spec.corpus.size()}};
}

Graph theorem_sample(Rng& r, int variant) {
  const int n = r.range(9, 11);
  switch (variant % 3) {
    case 0:
      return gnp(n, 0.15 + 0.3 * r.uniform(), r.next());
    case 1:
      return random_triangle_free(n, 0.3 + 0.6 * r.uniform(), r.next());
    default: {
      RealizeOptions o;
      o.extra_edge_prob = 0.3;
      for (int attempt = 0; attempt < 200; ++attempt) {
        auto m = realize_model(complete_bipartite(3, 4), 2, 1, r.next(), o);
        if (m.host.order() == n) return m.host;
      }
      return gnp(n, 0.3, r.next());
    }
  }
}

void theorem_k34(Ctx& c, bool three_pc) {
  const int min_n = pick(c.spec.min_n, 7);
  const int max_n = pick(c.spec.max_n, 8);
  const int samples = pick(c.spec.samples, 1000);
  const Graph k34 = complete_bipartite(3, 4);
  c.rep.corpus["sample_orders"] = {9, 11};
  c.rep.corpus["sample_mix"] = "gnp, random triangle-free, realized K34 models";
  std::int64_t variant = 0;
  for_corpus(
      c, min_n, max_n, samples, [&](Rng& r) { return theorem_sample(r, static_cast<int>(variant++)); },
      [&](std::int64_t item, const Graph& g) {
        ++c.rep.processed;
        SearchStatus concl = SearchStatus::not_found;
        json absent = json::array();
        if (three_pc) {
          const auto r = contains_3pc(g, c.detect());
          concl = r.status;
          absent.push_back(absent_cert("3pc"));
        } else if (contains_triangle(g)) {
          concl = SearchStatus::found;
        } else {
          concl = contains_theta(g, c.detect()).status;
          absent.push_back(absent_cert("triangle"));
          absent.push_back(absent_cert("theta"));
        }
        if (concl == SearchStatus::found) {
          c.count("conclusion_holds");
          return;
        }
        const auto h = contains_induced_minor(g, k34, c.search());
        if (h.status == SearchStatus::not_found) {
          c.count("hypothesis_absent");
          return;
        }
        if (h.status == SearchStatus::indeterminate || concl == SearchStatus::indeterminate) {
          c.count("indeterminate");
          c.indeterminate(item, g, h.found() ? "conclusion search out of budget" : "K34 induced-minor search out of budget");
          return;
        }
        c.count("violations");
        json e = entry(item, g, three_pc ? "K34 induced minor in a 3PC-free graph"
                                         : "K34 induced minor in a (triangle, theta)-free graph");
        e["certificates"].push_back(model_cert(*h.model, "K34"));
        for (auto& a : absent) e["certificates"].push_back(a);
        c.rep.violations.push_back(std::move(e));
      });
}

// Conclusion "contains a 3PC" for a host known to satisfy the hypothesis.
void expect_3pc(Ctx& c, std::int64_t item, const Graph& host, const json& hypothesis, const std::string& reason) {
  const auto r = contains_3pc(host, c.detect());
  if (r.found()) {
    c.count("witnesses");
    c.count(std::string("witness_") + to_string(r.witness->kind));
  } else if (r.status == SearchStatus::indeterminate) {
    c.count("indeterminate");
    c.indeterminate(item, host, "3PC search out of budget");
  } else {
    c.count("violations");
    json e = entry(item, host, reason);
    e["certificates"].push_back(hypothesis);
    e["certificates"].push_back(absent_cert("3pc"));
    c.rep.violations.push_back(std::move(e));
  }
}

void lemma_subk23im(Ctx& c) {
  const int samples = pick(c.spec.samples, 500);
  const Graph star = k23star();
  c.rep.corpus["models"] = {{"pattern", "k23star"}, {"count", samples}, {"branch_budget", {1, 3}}, {"subdivision_budget", {0, 2}}};
  std::int64_t item = 0;
  for (; item < samples; ++item) {
    Rng r = c.item_rng(item);
    RealizeOptions o;
    o.extra_edge_prob = 0.3;
    const int branch = r.range(1, 3);
    const int sub = r.range(0, 2);
    const auto m = realize_model(star, branch, sub, r.next(), o);
    ++c.rep.processed;
    if (const auto check = verify_model(m); !check.ok) {
      c.count("violations");
      c.rep.violations.push_back(entry(item, m.host, "generator produced an invalid model: " + check.message));
      continue;
    }
    expect_3pc(c, item, m.host, model_cert(m, "k23star"), "k23star induced minor in a 3PC-free graph");
  }
  for (const auto& g : c.spec.corpus) {
    ++c.rep.processed;
    const auto r = contains_3pc(g, c.detect());
    if (r.found()) {
      c.count("conclusion_holds");
    } else {
      const auto h = contains_induced_minor(g, star, c.search());
      if (h.found() && r.status == SearchStatus::not_found) {
        c.count("violations");
        json e = entry(item, g, "k23star induced minor in a 3PC-free graph");
        e["certificates"].push_back(model_cert(*h.model, "k23star"));
        e["certificates"].push_back(absent_cert("3pc"));
        c.rep.violations.push_back(std::move(e));
      } else if (h.status == SearchStatus::not_found) {
        c.count("hypothesis_absent");
      } else {
        c.count("indeterminate");
        c.indeterminate(item, g, "search out of budget");
      }
    }
    ++item;
  }
  c.rep.corpus["files"] = {{"label", c.spec.corpus_label}, {"count", c.spec.corpus.size()}};
}

void lemma_55(Ctx& c) {
  require_no_files(c.spec);
  const int samples = pick(c.spec.samples, 100);
  const Graph g55 = grid(5, 5);
  const auto in_grid = contains_induced_subgraph(g55, k23star(), c.search());
  c.rep.counters["grid_contains_k23star"] = to_string(in_grid.status);
  if (!in_grid.found()) {
    c.rep.violations.push_back(entry(-1, g55, "grid(5,5) does not contain k23star as an induced subgraph"));
  } else {
    c.rep.counters["grid_k23star_mapping"] = in_grid.mapping;
  }
  // The weaker relation the lemma actually needs.
  const auto im = contains_induced_minor(g55, k23star(), c.search());
  c.rep.counters["grid_contains_k23star_induced_minor"] = to_string(im.status);
  if (im.found()) c.rep.counters["grid_k23star_branch_sets"] = im.model->branch_sets;
  c.rep.corpus["hosts"] = {{"grid", "5x5"}, {"subdivisions", samples}, {"edge_prob", 0.3}, {"max_extra", 2}};
  for (std::int64_t item = 0; item <= samples; ++item) {
    BranchModel m;
    if (item == 0) {
      m.pattern = g55;
      m.host = g55;
      for (Vertex v = 0; v < g55.order(); ++v) m.branch_sets.push_back({v});
    } else {
      m = random_subdivision(g55, 0.3, 2, c.item_rng(item).next());
    }
    ++c.rep.processed;
    if (const auto check = verify_model(m); !check.ok) {
      c.count("violations");
      c.rep.violations.push_back(entry(item, m.host, "subdivision model invalid: " + check.message));
      continue;
    }
    expect_3pc(c, item, m.host, model_cert(m, "grid5x5"), "grid(5,5) induced minor in a 3PC-free graph");
  }
}

bool is_tree_set(const Graph& g, const VertexSet& s) {
  const auto r = induced_subgraph(g, s);
  return is_connected(r.graph) && r.graph.size() + 1 == s.size();
}

// Minimizes a realized model and checks the cycle bound, the degree-one
// private sets and minimality by single-vertex re-search. Returns the minimal
// model when everything was decided.
std::optional<BranchModel> minimal_model_checks(Ctx& c, std::int64_t item, const BranchModel& m, const std::string& name) {
  const auto mr = minimize_model(m, c.minimize());
  const BranchModel& mm = mr.model;
  if (!mr.exact) {
    c.count("indeterminate");
    c.indeterminate(item, m.host, "minimization re-search out of budget");
    return std::nullopt;
  }
  c.count("vertices_removed", mr.removed);
  bool bad = false;
  json e = entry(item, mm.host, "");
  e["certificates"].push_back(model_cert(mm, name));
  std::string reason;
  if (const auto gv = girth_tree_violations(mm); !gv.empty()) {
    reason += "branch set with a cycle longer than its degree; ";
    e["girth_violations"] = gv;
    bad = true;
  } else {
    c.count("cycle_bound_pass");
  }
  for (Vertex v = 0; v < mm.pattern.order(); ++v) {
    if (!is_tree_set(mm.host, mm.branch_sets[v])) {
      c.count("non_tree_sets");
      continue;
    }
    const auto ps = private_branch_sets(mm, v);
    c.count("leaves_checked", static_cast<std::int64_t>(ps.privates.size() + ps.violations.size()));
    c.count("leaves_with_private", static_cast<std::int64_t>(ps.privates.size()));
    if (!ps.violations.empty()) {
      reason += "degree-1 vertex without a private branch set; ";
      e["leaves_without_private"].push_back({{"pattern_vertex", v}, {"leaves", ps.violations}});
      bad = true;
    }
  }
  Vertex removable = -1;
  const auto st = find_removable_vertex(mm, c.minimize(), &removable);
  if (st == SearchStatus::found) {
    reason += "minimized model is not minimal; ";
    e["removable_vertex"] = removable;
    bad = true;
  } else if (st == SearchStatus::indeterminate) {
    c.count("indeterminate");
    c.indeterminate(item, m.host, "minimality re-check out of budget");
    return std::nullopt;
  } else {
    c.count("minimality_verified");
  }
  if (bad) {
    reason.resize(reason.size() - 2);
    e["reason"] = reason;
    c.count("violations");
    c.rep.violations.push_back(std::move(e));
    return std::nullopt;
  }
  return mm;
}

BranchModel girth_sample(Rng& r, const Graph& pattern, bool cycles) {
  RealizeOptions o;
  o.extra_edge_prob = 0.3;
  o.intra_edge_prob = cycles ? 0.3 : 0.0;
  const int branch = r.range(2, 4);
  const int sub = r.range(0, 1);
  return realize_model(pattern, branch, sub, r.next(), o);
}

void lemma_girthtree(Ctx& c) {
  require_no_files(c.spec);
  const int samples = pick(c.spec.samples, 200);
  c.rep.corpus["models"] = {{"patterns", {"K33", "K34"}}, {"count", samples}, {"branch_budget", {2, 4}},
                            {"subdivision_budget", {0, 1}}, {"intra_edge_prob", 0.3}};
  for (std::int64_t item = 0; item < samples; ++item) {
    Rng r = c.item_rng(item);
    const bool k34 = item % 2 == 1;
    const auto m = girth_sample(r, complete_bipartite(3, k34 ? 4 : 3), true);
    ++c.rep.processed;
    minimal_model_checks(c, item, m, k34 ? "K34" : "K33");
  }
}

void lemmas_134(Ctx& c) {
  require_no_files(c.spec);
  c.rep.counters["p"] = kLabelP;
  c.rep.counters["t"] = kLabelT;
  if (c.spec.full_scale) {
    c.rep.refused = true;
    c.rep.message = kRefusal;
    c.rep.outcome = "refused";
    return;
  }
  const int samples = pick(c.spec.samples, 100);
  c.rep.corpus["models"] = {{"patterns", {"K_{4,3}", "K_{3,3}"}}, {"count", samples}, {"k23star_hosts", samples}};
  const Graph star = k23star();
  std::int64_t item = 0;
  for (int i = 0; i < samples; ++i, ++item) {
    Rng r = c.item_rng(item);
    const int a = i % 2 == 0 ? 4 : 3;
    // Tree branch sets as under the girth assumption, every other sample.
    const auto m = girth_sample(r, complete_bipartite(a, 3), i % 4 >= 2);
    ++c.rep.processed;
    const auto mm = minimal_model_checks(c, item, m, a == 4 ? "K_{4,3}" : "K_{3,3}");
    if (!mm) continue;
    for (Vertex v = 0; v < a; ++v) {
      const auto& set = mm->branch_sets[v];
      if (set.size() < 3 || !is_tree_set(mm->host, set)) continue;
      c.count("large_tree_sets");
      const auto ps = private_branch_sets(*mm, v);
      // Two non-adjacent leaves with their private sets give the label.
      std::optional<std::pair<Vertex, Vertex>> label;
      for (auto i1 = ps.privates.begin(); i1 != ps.privates.end() && !label; ++i1) {
        for (auto i2 = std::next(i1); i2 != ps.privates.end() && !label; ++i2) {
          if (!mm->host.adjacent(i1->first, i2->first) && i1->second != i2->second) {
            label = std::minmax(i1->second, i2->second);
          }
        }
      }
      if (label) {
        c.count("labeled_sets");
      } else {
        c.count("violations");
        json e = entry(item, mm->host, "tree branch set of size >= 3 without two non-adjacent leaves with private sets");
        e["certificates"].push_back(model_cert(*mm, a == 4 ? "K_{4,3}" : "K_{3,3}"));
        e["pattern_vertex"] = v;
        c.rep.violations.push_back(std::move(e));
      }
    }
  }
  for (int i = 0; i < samples; ++i, ++item) {
    Rng r = c.item_rng(item);
    RealizeOptions o;
    o.extra_edge_prob = 0.3;
    const int branch = r.range(1, 3);
    const int sub = r.range(0, 2);
    const auto m = realize_model(star, branch, sub, r.next(), o);
    ++c.rep.processed;
    expect_3pc(c, item, m.host, model_cert(m, "k23star"), "k23star induced minor in a 3PC-free graph");
  }
}

json set_json(const std::vector<VertexSet>& sets) { return sets; }

void lemma_paths(Ctx& c, bool all) {
  require_no_files(c.spec);
  const int samples = pick(c.spec.samples, 500);
  c.rep.corpus["instances"] = {{"count", samples}, {"sets", all ? "2..3" : "2"}, {"freeness", to_string(c.spec.freeness)}};
  for (std::int64_t item = 0; item < samples; ++item) {
    Rng r = c.item_rng(item);
    const int k = all ? r.range(2, 3) : 2;
    const auto inst = lemma_instance(r.next(), k);
    ++c.rep.processed;
    c.count(std::string("source_") + inst.source);
    c.count("rejected_hosts", inst.rejected);
    for (const auto& s : inst.sets) {
      const auto w = classify_type(inst.graph, s, inst.xyz);
      c.count(std::string("type_") + to_string(w.kind) + (w.kind == SeesKind::claw && !w.path.empty() ? "_path_overlap" : ""));
    }
    json e = entry(item, inst.graph, "");
    e["sets"] = set_json(inst.sets);
    e["xyz"] = set_json({inst.xyz.begin(), inst.xyz.end()});
    Freeness host;
    bool violation = false;
    if (!all) {
      const auto v = check_one_path(inst.graph, inst.sets[0], inst.sets[1], inst.xyz, c.spec.freeness);
      host = v.host;
      if (v.both_path) c.count("both_path");
      violation = v.violation;
      e["tau"] = {v.tau_a, v.tau_b};
      e["reason"] = "a set is not of type path";
    } else {
      const auto v = check_all_path_common_center(inst.graph, inst.sets, inst.xyz, c.spec.freeness);
      host = v.host;
      if (v.all_path) c.count("all_path");
      if (!v.common.empty()) c.count("common_center");
      if (v.linear_order) c.count("linear_order");
      violation = v.violation;
      e["tau"] = v.taus;
      e["reason"] = "no common centre or centre sets not linearly ordered";
    }
    c.count(std::string("host_") + to_string(host.status));
    if (violation) {
      c.count("violations");
      e["host"] = to_string(host.status);
      c.rep.violations.push_back(std::move(e));
    } else if (!guarantee_applies(host.status)) {
      c.count("no_guarantee");
      if (host.status == FreenessStatus::unknown) c.indeterminate(item, inst.graph, "3PC-freeness check out of budget");
    }
  }
}

bool same_skeleton(const K33Skeleton& a, const K33Skeleton& b) {
  return a.a_path == b.a_path && a.b_path == b.b_path && a.c_path == b.c_path && a.p_path == b.p_path &&
         a.q_path == b.q_path && a.r_path == b.r_path && a.abc_role == b.abc_role && a.xyz_role == b.xyz_role &&
         a.hole == b.hole;
}

void lemma_exact1(Ctx& c) {
  require_no_files(c.spec);
  const int samples = pick(c.spec.samples, 100);
  c.rep.corpus["planted"] = {{"count", samples}, {"pendants", "every other instance"}};
  for (std::int64_t item = 0; item < samples; ++item) {
    const auto p = plant_k33_skeleton(c.item_rng(item).next(), item % 2 == 0);
    ++c.rep.processed;
    c.count("rejected_plants", p.rejected);
    const auto res = extract_k33_skeleton(p.graph, p.abc, p.xyz, c.spec.freeness);
    std::vector<std::string> problems = res.failures;
    if (res.status == SkeletonStatus::extracted) {
      c.count("extracted");
      if (check_skeleton(p.graph, p.abc, p.xyz, *res.skeleton).empty()) c.count("bullets_verified");
      if (same_skeleton(*res.skeleton, p.expected)) {
        c.count("matches_planted");
      } else {
        problems.push_back("extracted skeleton differs from the planted one");
      }
      if (res.small_sets == 1) {
        c.count("exactly_one_small_set");
      } else {
        problems.push_back("number of sets with at most two vertices is " + std::to_string(res.small_sets));
      }
    } else if (res.status == SkeletonStatus::no_guarantee) {
      c.count("no_guarantee");
      continue;
    }
    if (!problems.empty()) {
      c.count("violations");
      json e = entry(item, p.graph, problems.front());
      e["failures"] = problems;
      e["abc"] = set_json({p.abc.begin(), p.abc.end()});
      e["xyz"] = set_json({p.xyz.begin(), p.xyz.end()});
      c.rep.violations.push_back(std::move(e));
    }
  }
}

void tightness(Ctx& c) {
  const std::string target = c.spec.target.empty() ? "k33-triangle-theta-free" : c.spec.target;
  if (target != "k33-triangle-theta-free" && target != "prism-zero-necessity" && target != "pyramid-necessity") {
    throw InvalidInput("unknown tightness target '" + target + "'");
  }
  c.rep.target = target;
  const int max_n = pick(c.spec.max_n, 14);
  const int min_n = std::min(pick(c.spec.min_n, 8), max_n);
  const int samples = pick(c.spec.samples, 300);
  // The length-0 prism example carries K34, the other two K33.
  const bool zero = target == "prism-zero-necessity";
  const Graph pattern = complete_bipartite(3, zero ? 4 : 3);
  const std::string pattern_name = zero ? "K34" : "K33";
  const bool triangle_free = target == "k33-triangle-theta-free";
  c.rep.corpus["samples"] = {{"count", samples}, {"min_n", min_n}, {"max_n", max_n},
                             {"mix", triangle_free ? "random triangle-free, realized " + pattern_name + " models" : "gnp, realized " + pattern_name + " models"}};
  c.rep.corpus["files"] = {{"label", c.spec.corpus_label}, {"count", c.spec.corpus.size()}};

  auto sample = [&](Rng& r, std::int64_t item) {
    const int n = r.range(min_n, max_n);
    if (item % 2 == 0) {
      return triangle_free ? random_triangle_free(n, 0.2 + 0.6 * r.uniform(), r.next())
                           : gnp(n, 0.15 + 0.3 * r.uniform(), r.next());
    }
    RealizeOptions o;
    o.extra_edge_prob = 0.4;
    o.intra_edge_prob = triangle_free ? 0.0 : 0.3;
    for (int attempt = 0; attempt < 100; ++attempt) {
      auto m = realize_model(pattern, r.range(1, 3), r.range(0, 2), r.next(), o);
      if (m.host.order() <= max_n) return m.host;
    }
    return random_triangle_free(n, 0.5, r.next());
  };

  auto process = [&](std::int64_t item, const Graph& g) {
    ++c.rep.processed;
    json certs = json::array();
    auto absent = [&](const DetectResult& r, const char* what) {
      if (r.status == SearchStatus::indeterminate) c.indeterminate(item, g, std::string(what) + " search out of budget");
      if (r.status != SearchStatus::not_found) return false;
      certs.push_back(absent_cert(what));
      return true;
    };
    if (triangle_free) {
      if (contains_triangle(g)) return;
      certs.push_back(absent_cert("triangle"));
      if (!absent(contains_theta(g, c.detect()), "theta")) return;
    } else {
      if (!absent(contains_theta(g, c.detect()), "theta")) return;
      DetectOptions strict = c.detect();
      if (zero) {
        if (!absent(contains_pyramid(g, c.detect()), "pyramid")) return;
        strict.allow_prism_zero = false;
        if (!absent(contains_prism(g, strict), "prism-strict")) return;
        const auto z = contains_prism(g, c.detect());
        if (!z.found()) return;
        certs.push_back(witness_cert(*z.witness));
      } else {
        if (!absent(contains_prism(g, c.detect()), "prism")) return;
        const auto py = contains_pyramid(g, c.detect());
        if (!py.found()) return;
        certs.push_back(witness_cert(*py.witness));
      }
    }
    c.count("filter_pass");
    const auto h = contains_induced_minor(g, pattern, c.search());
    if (h.status == SearchStatus::indeterminate) c.indeterminate(item, g, pattern_name + " induced-minor search out of budget");
    if (!h.found()) return;
    json e = entry(item, g, target);
    e["certificates"] = certs;
    e["certificates"].push_back(model_cert(*h.model, pattern_name));
    c.rep.finds.push_back(std::move(e));
  };

  std::int64_t item = 0;
  for (; item < samples; ++item) {
    Rng r = c.item_rng(item);
    process(item, sample(r, item));
  }
  for (const auto& g : c.spec.corpus) process(item++, g);
  c.rep.message = c.rep.finds.empty() ? "not found at this scale" : "found; every find carries certificates";
  c.rep.outcome = c.rep.finds.empty() ? "not found at this scale" : "found";
}

void conjecture_probe(Ctx& c) {
  const std::string which = c.spec.target.empty() ? "es" : c.spec.target;
  if (which != "es" && which != "k6") throw InvalidInput("unknown conjecture '" + which + "' (es | k6)");
  c.rep.target = which;
  const Graph k33 = complete_bipartite(3, 3);
  const Graph k6 = complete(6);
  for_corpus(
      c, pick(c.spec.min_n, 1), pick(c.spec.max_n, 8), pick(c.spec.samples, 0),
      [&](Rng& r) { return gnp(r.range(6, 10), 0.2 + 0.4 * r.uniform(), r.next()); },
      [&](std::int64_t item, const Graph& g) {
        ++c.rep.processed;
        json certs = json::array();
        if (which == "es") {
          const auto eh = contains_even_hole(g, c.spec.budget);
          if (eh.status == SearchStatus::not_found) c.count("even_hole_free");
          const auto th = contains_theta(g, c.detect());
          if (th.status != SearchStatus::not_found) return;
          DetectOptions strict = c.detect();
          strict.allow_prism_zero = false;
          const auto pr = contains_prism(g, strict);
          if (pr.status != SearchStatus::not_found) return;
          if (contains_even_wheel(g)) return;
          c.count("odd_signable");
          certs = {absent_cert("theta"), absent_cert("prism-strict"), absent_cert("even-wheel")};
        } else {
          if (contains_triangle(g)) {
            c.count("skipped_triangle");
            return;
          }
          const auto m = contains_minor(g, k6, c.search());
          if (m.status == SearchStatus::indeterminate) c.indeterminate(item, g, "K6 minor search out of budget");
          if (!m.found()) return;
          c.count("hypothesis_holds");
          certs = {absent_cert("triangle"), model_cert(*m.model, "K6", Relation::minor)};
        }
        const auto h = contains_induced_minor(g, k33, c.search());
        if (h.status == SearchStatus::indeterminate) {
          c.indeterminate(item, g, "K33 induced-minor search out of budget");
          return;
        }
        const bool counterexample = which == "es" ? h.found() : !h.found();
        if (!counterexample) return;
        c.count("counterexamples");
        json e = entry(item, g, which == "es" ? "odd-signable graph with a K33 induced minor"
                                              : "triangle-free graph with a K6 minor and no K33 induced minor");
        e["certificates"] = certs;
        if (h.found()) {
          e["certificates"].push_back(model_cert(*h.model, "K33"));
        } else {
          e["certificates"].push_back(absent_cert("k33-induced-minor"));
        }
        c.rep.finds.push_back(e);
        c.rep.violations.push_back(std::move(e));
      });
  c.rep.message = c.rep.finds.empty() ? "no counterexample at this scale"
                                      : "COUNTEREXAMPLE CANDIDATE FOUND; certificates attached, verify independently";
  c.rep.outcome = c.rep.finds.empty() ? "no counterexample at this scale" : "counterexample";
}

}  // namespace

HarnessReport run_suite(const SuiteSpec& spec) {
  const auto& ids = suite_ids();
  if (spec.suite == "thm-134") {
    HarnessReport r;
    r.suite = spec.suite;
    r.seed = spec.seed;
    r.budget = spec.budget;
    r.refused = true;
    r.outcome = "refused";
    r.message = kRefusal;
    return r;
  }
  if (std::find(ids.begin(), ids.end(), spec.suite) == ids.end()) {
    throw InvalidInput("unknown suite '" + spec.suite + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  HarnessReport rep;
  rep.suite = spec.suite;
  rep.seed = spec.seed;
  rep.budget = spec.budget;
  Ctx c{spec, rep, Rng(spec.seed)};
  const std::string& s = spec.suite;
  if (s == "thm-k34-theta-triangle") {
    theorem_k34(c, false);
  } else if (s == "thm-k34-3pc") {
    theorem_k34(c, true);
  } else if (s == "lem-subk23im") {
    lemma_subk23im(c);
  } else if (s == "lem-55") {
    lemma_55(c);
  } else if (s == "lem-girthtree") {
    lemma_girthtree(c);
  } else if (s == "thm-134-lemmas") {
    lemmas_134(c);
  } else if (s == "lem-onepath") {
    lemma_paths(c, false);
  } else if (s == "lem-allpath") {
    lemma_paths(c, true);
  } else if (s == "lem-exact1") {
    lemma_exact1(c);
  } else if (s == "tightness-k33") {
    tightness(c);
  } else {
    conjecture_probe(c);
  }
  if (rep.outcome.empty()) rep.outcome = rep.violations.empty() ? "clean" : "violations";
  rep.counters["violations"] = static_cast<std::int64_t>(rep.violations.size());
  rep.counters["indeterminate"] = static_cast<std::int64_t>(rep.indeterminates.size());
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

namespace {

ConfigKind parse_kind(const std::string& s) {
  if (s == "theta") return ConfigKind::theta;
  if (s == "prism") return ConfigKind::prism;
  if (s == "pyramid") return ConfigKind::pyramid;
  throw InvalidInput("unknown configuration kind '" + s + "'");
}

bool absent_holds(const Graph& g, const std::string& what) {
  DetectOptions o;
  if (what == "triangle") return !contains_triangle(g).has_value();
  if (what == "theta") return contains_theta(g, o).status == SearchStatus::not_found;
  if (what == "pyramid") return contains_pyramid(g, o).status == SearchStatus::not_found;
  if (what == "prism") return contains_prism(g, o).status == SearchStatus::not_found;
  if (what == "prism-strict") {
    o.allow_prism_zero = false;
    return contains_prism(g, o).status == SearchStatus::not_found;
  }
  if (what == "3pc") return contains_3pc(g, o).status == SearchStatus::not_found;
  if (what == "even-wheel") return !contains_even_wheel(g).has_value();
  if (what == "k33-induced-minor") {
    return contains_induced_minor(g, complete_bipartite(3, 3)).status == SearchStatus::not_found;
  }
  throw InvalidInput("unknown absence claim '" + what + "'");
}

}  // namespace

std::vector<std::string> reverify_report(const json& report) {
  std::vector<std::string> problems;
  for (const char* section : {"violations", "finds"}) {
    if (!report.contains(section)) continue;
    for (const auto& e : report.at(section)) {
      if (!e.contains("certificates")) continue;
      const std::string tag = std::string(section) + " item " + e.at("item").dump();
      try {
        const Graph g = parse_graph6(e.at("graph6").get<std::string>());
        for (const auto& cert : e.at("certificates")) {
          const std::string type = cert.at("type").get<std::string>();
          if (type == "model") {
            BranchModel m;
            m.pattern = parse_graph6(cert.at("pattern_graph6").get<std::string>());
            m.host = g;
            m.branch_sets = cert.at("branch_sets").get<std::vector<VertexSet>>();
            const auto check = verify_model(m, parse_relation(cert.at("relation").get<std::string>()));
            if (!check.ok) problems.push_back(tag + ": model certificate fails: " + check.message);
          } else if (type == "3pc") {
            ThreePCWitness w;
            w.kind = parse_kind(cert.at("kind").get<std::string>());
            w.paths = cert.at("paths").get<std::array<std::vector<Vertex>, 3>>();
            if (auto why = check_3pc(g, w); !why.empty()) problems.push_back(tag + ": 3PC certificate fails: " + why);
          } else if (type == "absent") {
            const auto what = cert.at("what").get<std::string>();
            if (!absent_holds(g, what)) problems.push_back(tag + ": claimed absence of " + what + " does not hold");
          } else {
            problems.push_back(tag + ": unknown certificate type " + type);
          }
        }
      } catch (const std::exception& ex) {
        problems.push_back(tag + ": " + ex.what());
      }
    }
  }
  return problems;
}

LemmaInstance lemma_instance(std::uint64_t seed, int k) {
  if (k < 2 || k > 3) throw InvalidInput("lemma_instance: k must be 2 or 3");
  const Rng root(seed);
  LemmaInstance out;
  if (root.split(0).chance(0.5)) {
    for (int attempt = 1; attempt <= 60; ++attempt) {
      Rng r = root.split(static_cast<std::uint64_t>(attempt));
      GraphBuilder b(0);
      auto tree = [&](int size) {
        std::vector<Vertex> vs;
        for (int j = 0; j < size; ++j) {
          const Vertex v = b.add_vertex();
          if (j > 0) b.add_edge(v, vs[r.below(static_cast<std::uint64_t>(j))]);
          vs.push_back(v);
        }
        if (size >= 3 && r.chance(0.3)) {
          const Vertex u = vs[r.below(vs.size())];
          const Vertex w = vs[r.below(vs.size())];
          if (u != w) b.add_edge(u, w);
        }
        return vs;
      };
      std::array<std::vector<Vertex>, 3> t;
      for (auto& s : t) s = tree(r.range(1, 3));
      std::vector<std::vector<Vertex>> as;
      for (int i = 0; i < k; ++i) as.push_back(tree(r.range(1, 5)));
      for (const auto& a : as) {
        for (const auto& s : t) {
          const int edges = r.range(1, 2);
          for (int e = 0; e < edges; ++e) b.add_edge(a[r.below(a.size())], s[r.below(s.size())]);
        }
      }
      const Graph g = b.build();
      if (contains_3pc(g).status != SearchStatus::not_found) {
        ++out.rejected;
        continue;
      }
      out.graph = g;
      for (const auto& a : as) out.sets.push_back(make_set(a));
      for (int i = 0; i < 3; ++i) out.xyz[i] = make_set(t[i]);
      out.source = "random";
      return out;
    }
  }
  Rng r = root.split(1000);
  const auto p = plant_k33_skeleton(r.next(), r.chance(0.5));
  std::vector<int> order{0, 1, 2};
  r.shuffle(order);
  out.graph = p.graph;
  for (int i = 0; i < k; ++i) out.sets.push_back(p.abc[order[i]]);
  out.xyz = p.xyz;
  out.source = "planted";
  return out;
}

BranchModel random_subdivision(const Graph& g, double p, int max_extra, std::uint64_t seed) {
  Rng r(seed);
  GraphBuilder b(g.order());
  BranchModel m;
  m.pattern = g;
  for (Vertex v = 0; v < g.order(); ++v) m.branch_sets.push_back({v});
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      if (!r.chance(p)) {
        b.add_edge(u, v);
        continue;
      }
      const int extra = r.range(1, max_extra);
      Vertex prev = u;
      for (int i = 0; i < extra; ++i) {
        const Vertex x = b.add_vertex();
        b.add_edge(prev, x);
        m.branch_sets[u].push_back(x);
        prev = x;
      }
      b.add_edge(prev, v);
    }
  }
  m.host = b.build();
  return m;
}

}  // namespace imlab
