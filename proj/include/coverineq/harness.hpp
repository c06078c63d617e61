#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coverineq/covers.hpp"
#include "coverineq/inequalities.hpp"
#include "coverineq/json_io.hpp"

namespace coverineq {

struct SearchConfig {
  int trials = 100;
  int dim_lo = 2, dim_hi = 4;
  int m_lo = 2, m_hi = 4;
  int s_lo = 1, s_hi = 2;
  std::string kind = "unconditional";  // general | unconditional | product | hanner | mixed
  uint64_t seed = 1;
  double tolerance = 1e-6;
  int threads = 1;
};

struct TrialRecord {
  int index = 0;
  int dim = 0;
  std::string kind;
  json body;
  json cover;
  json anchor;  // max-section anchor used by the evaluation
  double ratio = 0.0;
  std::string ratio_frac;  // set on exact-path trials
  bool exact = false;
  bool theorem_regime = false;  // complement cover exists and is 1-reducible
  bool ok = true;
  std::string note;
};

struct SearchSummary {
  SearchConfig cfg;
  int completed = 0;
  int generation_failures = 0;
  int exact_count = 0;
  int numeric_count = 0;
  int theorem_count = 0;
  double min_ratio = 0.0;
  std::string min_ratio_frac;
  std::optional<TrialRecord> min_witness;
  std::vector<TrialRecord> counterexamples;
  std::vector<TrialRecord> near_tight;  // ratio < 1.05, recorded for inspection
  std::vector<TrialRecord> trials;
};

// Randomized exploration of the conjecture-form inequality; trials tagged by
// whether the reducibility hypothesis happens to hold.  Numeric-path ratios
// below 1 - 3*tolerance are re-run at doubled search effort before being
// reported as counterexamples.  Reproducible byte-for-byte under a fixed
// config; trials are independent and may run on several threads.
SearchSummary search_conjecture(const SearchConfig& cfg);

json summary_to_json(const SearchSummary& s);
json trial_to_json(const TrialRecord& t);
SearchConfig config_from_json(const json& j);
json config_to_json(const SearchConfig& cfg);

// Unconditional product body K = C x W over sigma: parallel sections are
// constant, so the conjecture-form check runs on the exact path and must
// hold; also verifies section constancy at sampled anchors.
InequalityReport verify_final_proposition(int n, const IndexSet& sigma,
                                          const CoverFamily& cover, uint64_t seed);

// Equality-case witness constructions; every returned report has ratio
// exactly 1.
std::vector<InequalityReport> equality_witness_suite();

struct OracleComparison {
  std::string id;
  double lhs_pipeline = 0.0, lhs_oracle = 0.0;
  double rhs_pipeline = 0.0, rhs_oracle = 0.0;
  double discrepancy = 0.0;  // max relative deviation
  bool ok = false;
};

// Independent grid/Monte-Carlo recomputation of selected fixtures:
//   "liakopoulos"  cross-polytope fixture, midpoint grid counting
//   "lemma31"      exponential pair, iterated Simpson with kink splitting
//   "volume"       triangulation volume vs Monte Carlo on seeded bodies
OracleComparison brute_oracle_small(const std::string& id, int resolution);

// Random s-cover of sigma with m clamped to the feasible range
// s < m <= s * |sigma|; falls back to the m-fold repetition of sigma (the
// only family on singleton bases).
CoverFamily random_admissible_cover(const IndexSet& sigma, int m_lo, int m_hi, int s_lo,
                                    int s_hi, Rng& rng);

// Cover catalogs used by the witness suites and the CLI.
std::vector<std::vector<IndexSet>> set_partitions(const IndexSet& sigma, int min_blocks);
// s-covers of sigma whose complement is 1-reducible (complements of
// concatenations of partitions), deduplicated, up to max_parts partitions.
std::vector<CoverFamily> covers_with_reducible_complement(const IndexSet& sigma, int max_parts);
// 1-reducible s-covers of the full index set (concatenations of partitions).
std::vector<CoverFamily> reducible_covers_of_full(int n, int max_s);

}  // namespace coverineq
