// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure.  Exact-arithmetic criteria assert rational equality; numeric paths
// use the stated tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "coverineq/harness.hpp"

using namespace coverineq;

namespace {

struct Outcome {
  int id;
  std::string label;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Outcome> results;

template <typename F>
void criterion(int id, const std::string& label, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o{id, label, false, "", 0.0};
  try {
    o.detail = body(o.pass);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  results.push_back(std::move(o));
}

IndexSet iset(int n, std::initializer_list<int> one_based) {
  std::vector<int> axes;
  for (int v : one_based) axes.push_back(v - 1);
  return IndexSet::of(n, axes);
}

std::string criterion1(bool& pass) {
  int checked = 0;
  for (int n = 2; n <= 4; ++n) {
    for (uint64_t bits = 1; bits < (uint64_t{1} << n) - 1; ++bits) {
      IndexSet sigma(n, bits);
      RationalPolytope body = hanner(n, sigma);
      for (const auto& cover : covers_with_reducible_complement(sigma, 2)) {
        InequalityReport r = check_thm_sharp_local(body, cover);
        ++checked;
        if (!r.exact || !r.equality)
          return "hanner n=" + std::to_string(n) + " sigma=" + sigma.str() +
                 " cover " + cover_str(cover) + " gave ratio != 1";
      }
    }
  }
  pass = checked > 0;
  return std::to_string(checked) + " hanner cover checks, all ratios exactly 1/1";
}

std::string criterion2(bool& pass) {
  RationalPolytope cross = hanner(3, IndexSet::full(3));
  CoverFamily cover = validate_cover({iset(3, {1}), iset(3, {2, 3})}, IndexSet::full(3));
  InequalityReport r = check_liakopoulos(cross, cover);
  pass = r.exact && r.lhs.rational() == Rational(4, 3) && r.rhs.rational() == Rational(4, 3);
  return "lhs=" + r.lhs.rational().frac_str() + " rhs=" + r.rhs.rational().frac_str();
}

std::string criterion3(bool& pass) {
  Rational v = prop42_special_n4();
  pass = v == Rational(945);
  return "quotient at n=4 is " + v.str();
}

std::string criterion4(bool& pass) {
  int checked = 0;
  for (int n = 8; n <= 40; ++n)
    for (int p = 2; 4 * p <= n; ++p) {
      ConstantComparison c = constant_ratio_prop41(n, p);
      ++checked;
      if (!c.holds) return "fails at n=" + std::to_string(n) + " p=" + std::to_string(p);
    }
  pass = checked >= 100;
  return std::to_string(checked) + " exact comparisons hold";
}

std::string criterion5(bool& pass) {
  for (int n = 5; n <= 20; ++n) {
    ConstantComparison c = constant_ratio_prop42(n);
    if (!c.holds) return "fails at n=" + std::to_string(n);
  }
  pass = true;
  return "16 exact comparisons hold";
}

std::string criterion6(bool& pass) {
  int exact_checks = 0, numeric_checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Rng rng = Rng::derive(60600, static_cast<uint64_t>(trial));
    const int n = rng.next_int(2, 4);
    const bool unconditional = trial % 2 == 0;
    RationalPolytope body =
        random_polytope(n, unconditional ? BodyKind::unconditional : BodyKind::general, rng);

    auto verdict = [&](const InequalityReport& r) -> bool {
      if (r.exact) ++exact_checks; else ++numeric_checks;
      return r.holds;
    };
    auto fail = [&](const char* what) {
      return std::string(what) + " failed on trial " + std::to_string(trial);
    };

    // Covers of the full index set.
    CoverFamily full_cover = random_admissible_cover(IndexSet::full(n), 2, 4, 1, 2, rng);
    if (!verdict(check_bollobas_thomason(body, full_cover))) return fail("eq1");
    if (!verdict(check_liakopoulos(body, full_cover))) return fail("eq3");

    // Covers of a random proper subset.
    int size = rng.next_int(1, n - 1);
    std::vector<int> axes;
    for (int i = 0; i < n; ++i) axes.push_back(i);
    for (int k = 0; k < size; ++k)
      std::swap(axes[k], axes[k + static_cast<int>(rng.next_below(
                                      static_cast<uint64_t>(n - k)))]);
    IndexSet sigma = IndexSet::of(n, std::vector<int>(axes.begin(), axes.begin() + size));
    CoverFamily proper_cover = random_admissible_cover(sigma, 2, 3, 1, 2, rng);
    if (!verdict(check_local_bt(body, proper_cover))) return fail("eq2");
    if (!verdict(check_local_meyer_abbc(body, proper_cover))) return fail("eq4");
    if (!verdict(check_abbc_original(body, proper_cover))) return fail("eq7");

    // Sharp local form needs a reducible complement; use the catalog.
    if (sigma.size() >= 2) {
      auto catalog = covers_with_reducible_complement(sigma, 1);
      if (!catalog.empty()) {
        const CoverFamily& c = catalog[rng.next_below(catalog.size())];
        if (!verdict(check_thm_sharp_local(body, c))) return fail("thm1.2");
        if (c.member_count() == 2 && c.multiplicity == 1)
          if (!verdict(check_aagjv_s1(body, c))) return fail("eq5");
      }
    }
    if (unconditional)
      if (!verdict(check_unconditional_improved(body, sigma))) return fail("thm1.4");

    // Block lemmas on small random blocks.
    int d1 = rng.next_int(1, 2), d2 = rng.next_int(1, 2);
    auto block_body = [&](int d) {
      if (d == 1) {
        VecQ lo(1), hi(1);
        lo(0) = -rng.next_rational_unit(8);
        hi(0) = rng.next_rational_unit(8);
        return hull({lo, hi});
      }
      return random_polytope(d, BodyKind::general, rng);
    };
    RationalPolytope k1 = block_body(d1), k2 = block_body(d2);
    VecQ a1(d1), a2(d2);
    for (int i = 0; i < d1; ++i) a1(i) = rng.next_rational(4);
    for (int i = 0; i < d2; ++i) a2(i) = rng.next_rational(4);
    if (!verdict(check_lemma_conv_blocks({{k1, a1}, {k2, a2}}))) return fail("lemma2.1");

    LogConcaveFn f1 = LogConcaveFn::indicator(k1, Rational(1));
    LogConcaveFn f2 = LogConcaveFn::indicator(k2, Rational(1));
    if (!verdict(check_operator_lower_bound({f1, f2}))) return fail("lemma2.3");

    LogConcaveFn g1 = LogConcaveFn::indicator(k1, rng.next_rational_unit(8));
    LogConcaveFn g2 = LogConcaveFn::indicator(k2, rng.next_rational_unit(8));
    if (!verdict(check_min_prod({g1, g2}))) return fail("lemma3.1");

    uint64_t sbits = 1 + rng.next_below((uint64_t{1} << (d1 + d2)) - 1);
    InequalityReport cap =
        check_cap_subspace({{k1, vecq_zero(d1)}, {k2, vecq_zero(d2)}}, IndexSet(d1 + d2, sbits));
    if (!cap.equality) return fail("lemma3.2");
  }
  pass = true;
  return std::to_string(exact_checks) + " exact + " + std::to_string(numeric_checks) +
         " numeric checks over 200 bodies, all hold";
}

std::string criterion7(bool& pass) {
  for (int i = 0; i < 50; ++i) {
    Rng rng = Rng::derive(70700, static_cast<uint64_t>(i));
    int n = rng.next_int(2, 3);
    RationalPolytope body = random_polytope(n, BodyKind::general, rng);
    auto catalog = reducible_covers_of_full(n, 2);
    const CoverFamily& cover = catalog[rng.next_below(catalog.size())];
    LogConcaveFn chi = LogConcaveFn::indicator(body, Rational(1));
    InequalityReport functional = check_functional_rs(chi, cover);
    InequalityReport geometric = check_liakopoulos(body, cover);
    if (!functional.exact || !geometric.exact)
      return "non-exact path on case " + std::to_string(i);
    if (functional.lhs.rational() != geometric.lhs.rational() ||
        functional.rhs.rational() != geometric.rhs.rational())
      return "mismatch on case " + std::to_string(i);
  }
  pass = true;
  return "50 functional/geometric pairs agree exactly";
}

std::string criterion8(bool& pass) {
  CoverFamily cover = validate_cover({iset(2, {1}), iset(2, {2})}, IndexSet::full(2));
  LogConcaveFn g = LogConcaveFn::gaussian(VecD::Zero(2), VecD::Ones(2), 1.0);
  InequalityReport r = check_functional_rs(g, cover);
  double lhs_err = std::abs(r.lhs.to_double() - M_PI) / M_PI;
  double rhs_err = std::abs(r.rhs.to_double() - M_PI / 2) / (M_PI / 2);
  double ratio_err = std::abs(r.ratio.to_double() - 2.0) / 2.0;
  pass = lhs_err < 1e-3 && rhs_err < 1e-3 && ratio_err < 1e-3;
  char buf[128];
  std::snprintf(buf, sizeof buf, "lhs=%.6f rhs=%.6f ratio=%.6f", r.lhs.to_double(),
                r.rhs.to_double(), r.ratio.to_double());
  return buf;
}

std::string criterion9(bool& pass) {
  for (int i = 0; i < 20; ++i) {
    Rng rng = Rng::derive(90900, static_cast<uint64_t>(i));
    int n = rng.next_int(2, 4);
    RationalPolytope body =
        random_polytope(n, i % 2 ? BodyKind::general : BodyKind::unconditional, rng);
    McVolume mc = mc_volume(body, 150000, 900 + i);
    if (std::abs(mc.estimate - body.volume().to_double()) > 4 * mc.stderr_)
      return "volume disagreement on body " + std::to_string(i);
  }
  OracleComparison liako = brute_oracle_small("liakopoulos", 200);
  if (!liako.ok) return "liakopoulos oracle discrepancy " + std::to_string(liako.discrepancy);
  OracleComparison l31 = brute_oracle_small("lemma31", 8);
  if (!l31.ok) return "lemma31 oracle discrepancy " + std::to_string(l31.discrepancy);
  pass = true;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "20 bodies within 4*stderr; grid discrepancies %.4f%% and %.4f%%",
                100 * liako.discrepancy, 100 * l31.discrepancy);
  return buf;
}

std::string criterion10(bool& pass) {
  SearchConfig cfg;
  cfg.trials = 500;
  cfg.dim_lo = 2;
  cfg.dim_hi = 4;
  cfg.kind = "exact_mix";
  cfg.seed = 101010;
  SearchSummary sum = search_conjecture(cfg);
  if (!sum.counterexamples.empty())
    return std::to_string(sum.counterexamples.size()) + " counterexamples recorded";
  if (sum.numeric_count != 0)
    return "expected the exact path only, got " + std::to_string(sum.numeric_count) + " numeric";
  if (!(sum.min_ratio >= 1.0)) return "min_ratio " + std::to_string(sum.min_ratio) + " < 1";
  std::string once = summary_to_json(sum).dump();
  std::string twice = summary_to_json(search_conjecture(cfg)).dump();
  if (once != twice) return "summary is not byte-reproducible";
  pass = true;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d trials, min_ratio=%.9f, %d generation failures, reproducible",
                sum.completed, sum.min_ratio, sum.generation_failures);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "hanner bodies meet the sharp local inequality with equality", criterion1);
  criterion(2, "cross-polytope section equality at 4/3", criterion2);
  criterion(3, "constant quotient 945 at n=4", criterion3);
  criterion(4, "quantified improvement grid, 8 <= n <= 40", criterion4);
  criterion(5, "quantified improvement at n = |sigma|+1, 5 <= n <= 20", criterion5);
  criterion(6, "random theorem suite over 200 seeded bodies", criterion6);
  criterion(7, "functional and geometric checks agree on indicators", criterion7);
  criterion(8, "gaussian functional ratio 2 within 1e-3", criterion8);
  criterion(9, "oracle agreement: Monte Carlo and grid recomputation", criterion9);
  criterion(10, "conjecture search: 500 exact trials, reproducible, no counterexamples",
            criterion10);

  bool all = true;
  for (const auto& o : results) {
    all = all && o.pass;
    std::printf("[%s] criterion %2d: %s — %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", o.id,
                o.label.c_str(), o.detail.c_str(), o.seconds);
  }
  std::printf("%s\n", all ? "ACCEPTANCE: ALL CRITERIA PASS" : "ACCEPTANCE: FAILURES PRESENT");
  return all ? 0 : 1;
}
