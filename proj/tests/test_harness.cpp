#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverineq/harness.hpp"

using namespace coverineq;

namespace {
IndexSet iset(int n, std::initializer_list<int> one_based) {
  std::vector<int> axes;
  for (int v : one_based) axes.push_back(v - 1);
  return IndexSet::of(n, axes);
}
}  // namespace

TEST_CASE("set partitions enumerate the Bell numbers") {
  CHECK(set_partitions(IndexSet::full(3), 1).size() == 5);
  CHECK(set_partitions(IndexSet::full(4), 1).size() == 15);
  CHECK(set_partitions(IndexSet::full(3), 2).size() == 4);
  for (const auto& p : set_partitions(IndexSet::full(4), 1)) {
    uint64_t seen = 0;
    for (const auto& block : p) {
      CHECK((seen & block.bits()) == 0);
      seen |= block.bits();
    }
    CHECK(seen == IndexSet::full(4).bits());
  }
}

TEST_CASE("catalog covers have 1-reducible complements") {
  auto covers = covers_with_reducible_complement(iset(4, {1, 2, 3}), 2);
  CHECK(covers.size() > 4);
  for (const auto& c : covers) {
    auto comp = complement_cover(c);
    CHECK(is_one_reducible(comp).has_value());
  }
  auto reducible = reducible_covers_of_full(3, 2);
  for (const auto& c : reducible) CHECK(is_one_reducible(c).has_value());
}

TEST_CASE("hanner-only search: every ratio is exactly one") {
  SearchConfig cfg;
  cfg.trials = 40;
  cfg.dim_lo = 2;
  cfg.dim_hi = 4;
  cfg.kind = "hanner";
  cfg.seed = 11;
  SearchSummary sum = search_conjecture(cfg);
  CHECK(sum.completed + sum.generation_failures == cfg.trials);
  CHECK(sum.counterexamples.empty());
  for (const auto& t : sum.trials) {
    if (!t.ratio_frac.empty()) CHECK(t.ratio_frac == "1/1");
  }
}

TEST_CASE("unconditional search runs on the exact path with no counterexamples") {
  SearchConfig cfg;
  cfg.trials = 60;
  cfg.kind = "unconditional";
  cfg.seed = 5;
  SearchSummary sum = search_conjecture(cfg);
  CHECK(sum.counterexamples.empty());
  CHECK(sum.numeric_count == 0);
  CHECK(sum.min_ratio >= 1.0);
}

TEST_CASE("search summaries are reproducible byte-for-byte and thread-invariant") {
  SearchConfig cfg;
  cfg.trials = 30;
  cfg.kind = "mixed";
  cfg.seed = 99;
  auto a = summary_to_json(search_conjecture(cfg)).dump();
  auto b = summary_to_json(search_conjecture(cfg)).dump();
  CHECK(a == b);
  SearchConfig threaded = cfg;
  threaded.threads = 4;
  auto c = summary_to_json(search_conjecture(threaded)).dump();
  CHECK(a == c);
}

TEST_CASE("final proposition holds exactly on unconditional product bodies") {
  IndexSet sigma = iset(4, {1, 2});
  auto covers = covers_with_reducible_complement(sigma, 1);
  REQUIRE(!covers.empty());
  for (uint64_t seed : {1, 2, 3}) {
    InequalityReport r = verify_final_proposition(4, sigma, covers[0], seed);
    CHECK(r.exact);
    CHECK(r.holds);
  }

  // A cross-polytope factor times a cube factor is the canonical case.
  auto c2 = covers_with_reducible_complement(iset(3, {1, 2}), 1);
  InequalityReport r = verify_final_proposition(3, iset(3, {1, 2}), c2[0], 7);
  CHECK(r.exact);
  CHECK(r.holds);
}

TEST_CASE("equality witness suite: every report is an exact equality") {
  auto reports = equality_witness_suite();
  CHECK(reports.size() > 50);
  for (const auto& r : reports) {
    CHECK(r.exact);
    CHECK(r.equality);
    CHECK(r.holds);
  }
}

TEST_CASE("brute oracles agree with the exact pipeline") {
  auto liako = brute_oracle_small("liakopoulos", 200);
  CHECK(liako.ok);
  CHECK(liako.discrepancy < 0.01);

  auto min_prod = brute_oracle_small("lemma31", 8);
  CHECK(min_prod.ok);
  CHECK(min_prod.lhs_oracle == doctest::Approx(2.0).epsilon(1e-3));

  auto vol = brute_oracle_small("volume", 10);
  CHECK(vol.ok);

  CHECK_THROWS_AS(brute_oracle_small("nope", 1), std::invalid_argument);
}
