#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "imlab/containment.hpp"
#include "imlab/graph.hpp"
#include "imlab/structure.hpp"

namespace imlab {

inline constexpr int kReportSchema = 1;

// Constants of the K_{t,p} girth argument. The lemma suite records them but
// never scales them down.
inline constexpr int kLabelP = 12;
inline constexpr int kLabelT = 2 * (kLabelP * (kLabelP - 1) / 2) + 2;
static_assert(kLabelT == 134);

inline constexpr const char* kRefusal = "not desk-reproducible; run lemma-level suites";

const std::vector<std::string>& suite_ids();

struct SuiteSpec {
  std::string suite;
  // -1 means the suite default. For the theorem suites and probes min_n..max_n
  // is an exhaustive range of connected graphs; for tightness searches max_n
  // bounds the sampled orders.
  int min_n = -1;
  int max_n = -1;
  int samples = -1;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  std::vector<Graph> corpus;  // external graphs, e.g. from a graph6 file
  std::string corpus_label;
  FreenessMode freeness = FreenessMode::verify;
  // tightness-k33: k33-triangle-theta-free | prism-zero-necessity | pyramid-necessity
  // conjecture-probe: es | k6
  std::string target;
  bool full_scale = false;  // thm-134 at (t, p) = (134, 12): refused
};

struct HarnessReport {
  std::string suite;
  std::string target;
  nlohmann::json corpus = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::int64_t processed = 0;
  nlohmann::json counters = nlohmann::json::object();
  nlohmann::json violations = nlohmann::json::array();
  nlohmann::json indeterminates = nlohmann::json::array();
  nlohmann::json finds = nlohmann::json::array();
  std::string outcome;
  std::string message;
  bool refused = false;
  double elapsed_ms = 0;

  // 0 clean, 1 violations, 2 refused.
  int exit_code() const;
};

// Timing is the only non-deterministic field; leave it out to compare runs.
nlohmann::json to_json(const HarnessReport& r, bool with_timing = true);

// Throws InvalidInput for an unknown suite or target.
HarnessReport run_suite(const SuiteSpec& spec);

// Independent pass over a report: re-checks every certificate attached to a
// violation or find from the stored graph6 and vertex lists. Returns one
// message per certificate that fails.
std::vector<std::string> reverify_report(const nlohmann::json& report);

// Seeded hypothesis instance for the path lemmas: k connected sets that are
// pairwise anticomplete and each see all of X, Y, Z, in a host verified to be
// 3PC-free. Mixes rejection-sampled random instances with planted skeletons.
struct LemmaInstance {
  Graph graph;
  std::vector<VertexSet> sets;
  Triple xyz;
  std::string source;  // "random" or "planted"
  int rejected = 0;
};
LemmaInstance lemma_instance(std::uint64_t seed, int k);

// Subdivides each edge of g with probability p by 1..max_extra new vertices.
// Returns the host and the induced-minor model of g it carries.
BranchModel random_subdivision(const Graph& g, double p, int max_extra, std::uint64_t seed);

}  // namespace imlab
