#include "doctest.h"

#include <algorithm>

#include "imlab/detectors.hpp"
#include "imlab/error.hpp"
#include "imlab/generators.hpp"
#include "imlab/harness.hpp"
#include "imlab/io.hpp"

using namespace imlab;
using nlohmann::json;

TEST_CASE("suite ids are listed and unknown ones rejected") {
  const auto& ids = suite_ids();
  CHECK(std::find(ids.begin(), ids.end(), "lem-55") != ids.end());
  SuiteSpec s;
  s.suite = "lem-nothing";
  CHECK_THROWS_AS(run_suite(s), InvalidInput);
  s.suite = "tightness-k33";
  s.target = "nothing";
  CHECK_THROWS_AS(run_suite(s), InvalidInput);
}

TEST_CASE("the full-scale theorem suite is refused") {
  SuiteSpec s;
  s.suite = "thm-134";
  const auto r = run_suite(s);
  CHECK(r.refused);
  CHECK(r.exit_code() == 2);
  CHECK(r.message == kRefusal);
  s.suite = "thm-134-lemmas";
  s.full_scale = true;
  CHECK(run_suite(s).exit_code() == 2);
}

TEST_CASE("an empty corpus processes nothing") {
  SuiteSpec s;
  s.suite = "thm-k34-3pc";
  s.min_n = 1;
  s.max_n = 0;
  s.samples = 0;
  const auto r = run_suite(s);
  CHECK(r.processed == 0);
  CHECK(r.violations.empty());
  CHECK(r.indeterminates.empty());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("external corpus graphs are checked") {
  SuiteSpec s;
  s.suite = "lem-subk23im";
  s.samples = 0;
  s.corpus = {k23star(), cycle(5), subdivide(complete_bipartite(2, 3), 2)};
  s.corpus_label = "inline";
  const auto r = run_suite(s);
  CHECK(r.processed == 3);
  CHECK(r.violations.empty());
  CHECK(r.counters.at("conclusion_holds") == 2);
  CHECK(r.counters.at("hypothesis_absent") == 1);
  s.suite = "lem-onepath";
  CHECK_THROWS_AS(run_suite(s), InvalidInput);
}

TEST_CASE("runs are deterministic in the seed") {
  for (const char* suite : {"lem-onepath", "lem-allpath", "lem-exact1", "lem-girthtree", "tightness-k33"}) {
    SuiteSpec s;
    s.suite = suite;
    s.samples = 6;
    s.max_n = 9;
    s.seed = 5;
    const auto a = to_json(run_suite(s), false);
    const auto b = to_json(run_suite(s), false);
    CHECK_MESSAGE(a == b, suite);
    CHECK_FALSE(a.contains("elapsed_ms"));
    CHECK(a.at("schema") == kReportSchema);
    s.seed = 6;
    if (std::string(suite) != "tightness-k33") CHECK_MESSAGE(to_json(run_suite(s), false) != a, suite);
  }
}

TEST_CASE("reverification catches tampered certificates") {
  const Graph g = theta(2, 2, 3);
  const auto w = *is_theta(g);
  json e{{"item", 0}, {"graph6", emit_graph6(g)}, {"reason", "test"}};
  e["certificates"] = json::array();
  e["certificates"].push_back({{"type", "3pc"}, {"kind", "theta"}, {"paths", w.paths}});
  e["certificates"].push_back({{"type", "model"},
                               {"pattern", "C3"},
                               {"pattern_graph6", emit_graph6(cycle(3))},
                               {"relation", "induced-minor"},
                               {"branch_sets", std::vector<VertexSet>{{0}, w.paths[0], w.paths[1]}}});
  json report{{"violations", json::array({e})}, {"finds", json::array()}};
  const auto clean = reverify_report(report);
  // The model certificate is deliberately wrong: paths 0 and 1 share the ends.
  CHECK(clean.size() == 1);

  report["violations"][0]["certificates"].erase(1);
  CHECK(reverify_report(report).empty());
  report["violations"][0]["certificates"][0]["paths"][0][1] = w.paths[1][1];
  CHECK(reverify_report(report).size() == 1);
  report["violations"][0]["certificates"][0] = {{"type", "absent"}, {"what", "theta"}};
  CHECK(reverify_report(report).size() == 1);
  report["violations"][0]["certificates"][0] = {{"type", "absent"}, {"what", "triangle"}};
  CHECK(reverify_report(report).empty());
}

TEST_CASE("lemma instances meet their hypotheses") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int k = 2 + static_cast<int>(s % 2);
    const auto inst = lemma_instance(s, k);
    REQUIRE(inst.sets.size() == static_cast<std::size_t>(k));
    const auto all = check_all_path_common_center(inst.graph, inst.sets, inst.xyz, FreenessMode::verify);
    CHECK(all.host.status == FreenessStatus::verified_free);
    CHECK(all.all_path);
    CHECK_FALSE(all.violation);
  }
  CHECK_THROWS_AS(lemma_instance(1, 4), InvalidInput);
}

TEST_CASE("random subdivisions carry a valid model") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto m = random_subdivision(grid(3, 4), 0.4, 3, s);
    CHECK(verify_model(m).ok);
    CHECK(m.host.order() >= 12);
    CHECK(m.host.size() - m.host.order() == grid(3, 4).size() - 12);
  }
}
