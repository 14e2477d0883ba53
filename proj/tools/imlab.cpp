#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "imlab/containment.hpp"
#include "imlab/detectors.hpp"
#include "imlab/error.hpp"
#include "imlab/generators.hpp"
#include "imlab/harness.hpp"
#include "imlab/io.hpp"
#include "imlab/structure.hpp"

using namespace imlab;
using json = nlohmann::json;

namespace {

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_text(out, text);
  }
}

Graph load_pattern(const std::string& spec) {
  if (std::filesystem::exists(spec)) return read_graph(spec);
  return named_graph(spec);
}

double param(const std::vector<std::string>& p, std::size_t i, const std::string& what) {
  if (i >= p.size()) throw InvalidInput("missing parameter: " + what);
  try {
    return std::stod(p[i]);
  } catch (const std::exception&) {
    throw InvalidInput("bad value for " + what + ": '" + p[i] + "'");
  }
}

int run_gen(const std::string& family, const std::vector<std::string>& p, std::uint64_t seed, const std::string& out,
            const std::string& model_out) {
  std::vector<Graph> graphs;
  if (family == "gnp") {
    graphs.push_back(gnp(static_cast<int>(param(p, 0, "n")), param(p, 1, "p"), seed));
  } else if (family == "triangle-free") {
    graphs.push_back(random_triangle_free(static_cast<int>(param(p, 0, "n")), param(p, 1, "p"), seed));
  } else if (family == "connected") {
    graphs = enumerate_connected(static_cast<int>(param(p, 0, "n")));
  } else if (family == "graphs") {
    graphs = enumerate_graphs(static_cast<int>(param(p, 0, "n")));
  } else if (family == "realize") {
    if (p.empty()) throw InvalidInput("missing parameter: pattern");
    const auto m = realize_model(load_pattern(p[0]), static_cast<int>(param(p, 1, "branch budget")),
                                 static_cast<int>(param(p, 2, "subdivision budget")), seed);
    graphs.push_back(m.host);
    if (!model_out.empty()) {
      json j{{"pattern", emit_graph6(m.pattern)}, {"branch_sets", m.branch_sets}, {"seed", seed}};
      write_text(model_out, j.dump(2) + "\n");
    }
  } else if (family == "subdivision") {
    if (p.empty()) throw InvalidInput("missing parameter: graph");
    graphs.push_back(random_subdivision(load_pattern(p[0]), param(p, 1, "edge probability"),
                                        static_cast<int>(param(p, 2, "max extra vertices")), seed)
                         .host);
  } else {
    std::string name = family;
    for (const auto& x : p) name += (name == family ? "" : ",") + x;
    graphs.push_back(named_graph(name));
  }
  std::string text;
  for (const auto& g : graphs) text += emit_graph6(g) + "\n";
  emit(out, text);
  return 0;
}

int run_check(const std::string& host_path, const std::string& pattern, const std::string& relation,
              const std::string& witness, std::uint64_t budget) {
  const Graph host = read_graph(host_path);
  const Graph pat = load_pattern(pattern);
  SearchOptions o;
  o.budget = budget;
  const auto rel = parse_relation(relation);
  const auto r = contains(rel, host, pat, o);
  json j{{"relation", to_string(rel)},
         {"found", r.found()},
         {"status", to_string(r.status)},
         {"branch_sets", r.model ? json(r.model->branch_sets) : json::array()},
         {"stats", {{"nodes", r.stats.nodes}, {"elapsed_ms", r.stats.elapsed_ms}}}};
  if (!r.mapping.empty()) j["mapping"] = r.mapping;
  std::cout << to_string(r.status) << "\n";
  if (!witness.empty()) write_text(witness, j.dump(2) + "\n");
  return 0;
}

json witness_json(const ThreePCWitness& w) {
  return {{"kind", to_string(w.kind)}, {"paths", w.paths}, {"ends", w.ends()}};
}

int run_detect(const std::string& graph_path, const std::string& what, bool whole, const std::string& witness,
               std::uint64_t budget) {
  const Graph g = read_graph(graph_path);
  json j{{"what", what}, {"whole_graph", whole}};
  if (whole) {
    std::optional<ThreePCWitness> w;
    if (what == "theta") {
      w = is_theta(g);
    } else if (what == "prism") {
      w = is_prism(g);
    } else if (what == "pyramid") {
      w = is_pyramid(g);
    } else if (what == "3pc") {
      w = is_3pc(g);
    } else {
      throw InvalidInput("--whole-graph applies to theta, prism, pyramid and 3pc only");
    }
    j["status"] = w ? "found" : "not-found";
    if (w) j["witness"] = witness_json(*w);
  } else if (what == "theta" || what == "prism" || what == "pyramid" || what == "3pc") {
    DetectOptions o;
    o.budget = budget;
    const auto r = what == "theta"   ? contains_theta(g, o)
                   : what == "prism" ? contains_prism(g, o)
                   : what == "pyramid" ? contains_pyramid(g, o)
                                       : contains_3pc(g, o);
    j["status"] = to_string(r.status);
    j["nodes"] = r.nodes;
    if (r.witness) j["witness"] = witness_json(*r.witness);
  } else if (what == "even-hole") {
    const auto r = contains_even_hole(g, budget);
    j["status"] = to_string(r.status);
    if (!r.hole.empty()) j["witness"] = {{"hole", r.hole}};
  } else if (what == "girth") {
    const auto r = girth(g);
    j["status"] = "found";
    j["girth"] = r ? json(*r) : json("acyclic");
  } else if (what == "triangle") {
    const auto r = contains_triangle(g);
    j["status"] = r ? "found" : "not-found";
    if (r) j["witness"] = {{"triangle", *r}};
  } else {
    throw InvalidInput("unknown --what '" + what + "'");
  }
  std::cout << (what == "girth" ? j["girth"].dump() : j["status"].get<std::string>()) << "\n";
  if (!witness.empty()) write_text(witness, j.dump(2) + "\n");
  return 0;
}

json sees_json(const SeesTypeWitness& w) {
  json j{{"kind", to_string(w.kind)}};
  if (!w.path.empty()) {
    j["path"] = w.path;
    std::vector<std::string> c;
    for (int i : w.centers) c.push_back(std::string(1, "XYZ"[i]));
    j["centers"] = c;
  }
  if (w.kind == SeesKind::claw) j["apex"] = w.apex;
  if (w.kind != SeesKind::path) j["legs"] = w.legs;
  return j;
}

std::vector<std::string> center_names(const std::vector<int>& c) {
  std::vector<std::string> out;
  for (int i : c) out.push_back(std::string(1, "XYZ"[i]));
  return out;
}

int run_classify(const std::string& graph_path, const std::string& sets_path, const std::string& freeness,
                 const std::string& out) {
  const Graph g = read_graph(graph_path);
  std::ifstream in(sets_path);
  if (!in) throw InvalidInput("cannot open " + sets_path);
  json sets;
  try {
    sets = json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(sets_path + ": " + e.what());
  }
  if (!sets.is_object()) throw InvalidInput(sets_path + ": expected an object of named vertex lists");
  const auto mode = parse_freeness_mode(freeness);
  auto get = [&](const std::string& name) {
    if (!sets.contains(name)) throw InvalidInput(sets_path + ": missing set " + name);
    return make_set(sets.at(name).get<std::vector<Vertex>>());
  };
  const Triple t{get("X"), get("Y"), get("Z")};
  std::vector<std::string> names;
  std::vector<VertexSet> as;
  for (auto it = sets.begin(); it != sets.end(); ++it) {
    if (it.key() == "X" || it.key() == "Y" || it.key() == "Z") continue;
    names.push_back(it.key());
    as.push_back(get(it.key()));
  }
  if (as.empty()) throw InvalidInput(sets_path + ": no set to classify besides X, Y, Z");
  json j;
  for (std::size_t i = 0; i < as.size(); ++i) {
    json e = sees_json(classify_type(g, as[i], t));
    e["tau"] = center_names(path_type_centers(g, as[i], t).centers);
    j["sets"][names[i]] = e;
  }
  auto hypothesis = [&](const std::string& key, const std::function<json()>& f) {
    try {
      j[key] = f();
    } catch (const PreconditionError& e) {
      j[key] = {{"hypothesis_failed", e.what()}};
    }
  };
  if (as.size() >= 2) {
    hypothesis("common_center", [&] {
      const auto v = check_all_path_common_center(g, as, t, mode);
      return json{{"common", center_names(v.common)}, {"all_path", v.all_path}, {"linear_order", v.linear_order},
                  {"violation", v.violation}, {"host", to_string(v.host.status)}};
    });
  }
  if (as.size() == 3) {
    hypothesis("skeleton", [&] {
      const auto r = extract_k33_skeleton(g, {as[0], as[1], as[2]}, t, mode);
      json s{{"status", to_string(r.status)}, {"failures", r.failures}, {"host", to_string(r.host.status)}};
      if (r.skeleton) {
        const auto& k = *r.skeleton;
        s["paths"] = {{"A'", k.a_path}, {"B'", k.b_path}, {"C'", k.c_path},
                      {"P", k.p_path},  {"Q", k.q_path},  {"R", k.r_path}};
        s["hole"] = k.hole;
        s["small_sets"] = r.small_sets;
      }
      return s;
    });
  }
  emit(out, j.dump(2) + "\n");
  return 0;
}

int run_harness(SuiteSpec spec, const std::string& corpus, const std::string& out, bool timing, bool reverify) {
  if (!corpus.empty()) {
    spec.corpus = read_graphs(corpus);
    spec.corpus_label = std::filesystem::path(corpus).filename().string();
  }
  const auto rep = run_suite(spec);
  const json j = to_json(rep, timing);
  emit(out, j.dump(2) + "\n");
  std::cerr << spec.suite << ": " << rep.outcome << " (processed " << rep.processed << ", violations "
            << rep.violations.size() << ", indeterminate " << rep.indeterminates.size() << ")";
  if (!rep.message.empty()) std::cerr << ": " << rep.message;
  std::cerr << "\n";
  if (reverify) {
    const auto problems = reverify_report(j);
    for (const auto& p : problems) std::cerr << "reverify: " << p << "\n";
    if (!problems.empty()) return 1;
  }
  return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"imlab: induced minors and three-path configurations"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  std::string out;

  auto* gen = app.add_subcommand("gen", "generate graphs as graph6");
  std::string family;
  std::vector<std::string> params;
  std::string model_out;
  gen->add_option("family", family,
                  "named family (K5, K3,4, C6, P4, claw, k23star, grid5x5, theta2,2,3, prism0,2,2, pyramid1,2,2) or "
                  "gnp | triangle-free | connected | graphs | realize | subdivision")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--out", out, "output file (default stdout)");
  gen->add_option("--model", model_out, "realize: write the branch sets as JSON");

  auto* check = app.add_subcommand("check", "containment test");
  std::string host, pattern, relation = "induced-minor", witness;
  check->add_option("--host", host, "host graph file")->required();
  check->add_option("--pattern", pattern, "pattern file or named graph")->required();
  check->add_option("--relation", relation, "induced-subgraph | induced-minor | minor");
  check->add_option("--witness", witness, "witness JSON output");
  check->add_option("--budget", budget, "search node budget");

  auto* detect = app.add_subcommand("detect", "configuration detectors");
  std::string graph, what;
  bool whole = false;
  detect->add_option("--graph", graph, "graph file")->required();
  detect->add_option("--what", what, "theta | prism | pyramid | 3pc | even-hole | girth | triangle")->required();
  detect->add_flag("--whole-graph", whole, "recognise the whole graph instead of searching");
  detect->add_option("--witness", witness, "witness JSON output");
  detect->add_option("--budget", budget, "search node budget");

  auto* classify = app.add_subcommand("classify", "type of connected sets against X, Y, Z");
  std::string sets_path, freeness = "verify";
  classify->add_option("--graph", graph, "graph file")->required();
  classify->add_option("--sets", sets_path, "JSON object of named vertex lists (X, Y, Z and others)")->required();
  classify->add_option("--freeness", freeness, "assume | verify | skip");
  classify->add_option("--out", out, "output file (default stdout)");

  auto* harness = app.add_subcommand("harness", "run a suite and write a JSON report");
  SuiteSpec spec;
  std::string corpus;
  bool no_timing = false;
  bool reverify = false;
  harness->add_option("--suite", spec.suite, "suite id")->required();
  harness->add_option("--min-n", spec.min_n, "smallest exhaustive order");
  harness->add_option("--max-n", spec.max_n, "largest exhaustive (or sampled) order");
  harness->add_option("--samples", spec.samples, "number of seeded samples or instances");
  harness->add_option("--seed", spec.seed, "seed");
  harness->add_option("--budget", spec.budget, "search node budget");
  harness->add_option("--corpus", corpus, "extra graphs (graph6 or edge lists)");
  harness->add_option("--target", spec.target, "tightness target or conjecture (es | k6)");
  harness->add_option("--freeness", freeness, "assume | verify | skip");
  harness->add_flag("--full-scale", spec.full_scale, "thm-134-lemmas at (t, p) = (134, 12)");
  harness->add_flag("--no-timing", no_timing, "omit elapsed time from the report");
  harness->add_flag("--reverify", reverify, "re-check every certificate in the report");
  harness->add_option("--out", out, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) return run_gen(family, params, seed, out, model_out);
    if (*check) return run_check(host, pattern, relation, witness, budget);
    if (*detect) return run_detect(graph, what, whole, witness, budget);
    if (*classify) return run_classify(graph, sets_path, freeness, out);
    spec.freeness = parse_freeness_mode(freeness);
    return run_harness(spec, corpus, out, !no_timing, reverify);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
