// coverineq: verification suites, constant tables, and conjecture search for
// cover inequalities on convex bodies and log-concave functions.
//
// Exit codes: 0 all checks pass, 1 a theorem check failed, 2 configuration
// or I/O error, 3 a conjecture counterexample was recorded.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "coverineq/harness.hpp"
#include "coverineq/json_io.hpp"

namespace {

using namespace coverineq;

constexpr const char* kVersion = "0.1.0";

std::string manifest_id(const std::string& command, uint64_t seed, const std::string& detail) {
  // Deterministic id so that reports referencing it reproduce byte-for-byte.
  std::string blob = command + "|" + std::to_string(seed) + "|" + detail;
  uint64_t h = 1469598103934665603ULL;
  for (char c : blob) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

int write_manifest(const std::string& out_path, const std::string& command,
                   const std::string& id, const json& config_echo,
                   const std::string& started, const std::string& finished) {
  json m;
  m["manifest_id"] = id;
  m["command"] = command;
  m["version"] = kVersion;
  m["config"] = config_echo;
  m["started"] = started;
  m["finished"] = finished;
  m["out"] = out_path;
  std::ofstream f(out_path + ".manifest.json");
  if (!f) {
    std::cerr << "error: cannot write manifest next to " << out_path << "\n";
    return 2;
  }
  f << m.dump(2) << "\n";
  return 0;
}

int thread_count_from_env() {
  const char* env = std::getenv("COVERINEQ_THREADS");
  if (!env) return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

// Fixed body/cover catalog for the geometric core suite.
std::vector<InequalityReport> run_core_suite(uint64_t seed) {
  std::vector<InequalityReport> reports;
  Rng rng(seed);
  for (int n = 2; n <= 4; ++n) {
    std::vector<std::pair<std::string, RationalPolytope>> bodies;
    bodies.emplace_back("cube", hanner(n, IndexSet::empty(n)));
    bodies.emplace_back("cross", hanner(n, IndexSet::full(n)));
    if (n >= 3) bodies.emplace_back("hanner", hanner(n, IndexSet::of(n, {0, 1})));
    bodies.emplace_back("random_general", random_polytope(n, BodyKind::general, rng));
    bodies.emplace_back("random_unconditional", random_polytope(n, BodyKind::unconditional, rng));

    auto full_covers = reducible_covers_of_full(n, 2);
    if (full_covers.size() > 12) full_covers.resize(12);
    std::vector<IndexSet> lw;
    for (int i = 0; i < n; ++i) lw.push_back(IndexSet::full(n).minus(IndexSet::of(n, {i})));
    full_covers.push_back(validate_cover(lw, IndexSet::full(n)));

    for (auto& [name, body] : bodies) {
      for (const auto& cover : full_covers) {
        if (cover.member_count() < 2) continue;
        auto tag = [&](InequalityReport r) {
          r.notes.push_back("body " + name + " n=" + std::to_string(n));
          reports.push_back(std::move(r));
        };
        tag(check_bollobas_thomason(body, cover));
        tag(check_liakopoulos(body, cover));
      }
      for (uint64_t bits = 1; bits < (uint64_t{1} << n) - 1; ++bits) {
        IndexSet sigma(n, bits);
        if (sigma.size() < 1 || sigma.size() >= n) continue;
        auto proper_covers = covers_with_reducible_complement(sigma, 1);
        if (proper_covers.size() > 4) proper_covers.resize(4);
        for (const auto& cover : proper_covers) {
          auto tag = [&](InequalityReport r) {
            r.notes.push_back("body " + name + " n=" + std::to_string(n));
            reports.push_back(std::move(r));
          };
          tag(check_local_bt(body, cover));
          tag(check_local_meyer_abbc(body, cover));
          tag(check_abbc_original(body, cover));
          tag(check_thm_sharp_local(body, cover));
          if (cover.member_count() == 2 && cover.multiplicity == 1)
            tag(check_aagjv_s1(body, cover));
        }
        if (sigma.size() >= 1 && (name == "cube" || name == "cross" ||
                                  name == "random_unconditional")) {
          InequalityReport r = check_unconditional_improved(body, sigma);
          r.notes.push_back("body " + name + " n=" + std::to_string(n));
          reports.push_back(std::move(r));
        }
      }
    }
  }
  return reports;
}

std::vector<InequalityReport> run_functional_suite(uint64_t seed) {
  std::vector<InequalityReport> reports;
  Rng rng(seed);

  // Functional Rogers-Shephard on indicators and Gaussians.
  for (int n = 2; n <= 3; ++n) {
    auto covers = reducible_covers_of_full(n, 2);
    if (covers.size() > 8) covers.resize(8);
    RationalPolytope body = random_polytope(n, BodyKind::general, rng);
    LogConcaveFn chi = LogConcaveFn::indicator(body, Rational(1));
    LogConcaveFn gauss = LogConcaveFn::gaussian(VecD::Zero(n), VecD::Ones(n), 1.0);
    for (const auto& cover : covers) {
      reports.push_back(check_functional_rs(chi, cover));
      reports.push_back(check_functional_rs(gauss, cover));
    }
  }

  // Marginal corollary on proper bases.
  for (int n = 3; n <= 4; ++n) {
    IndexSet sigma = IndexSet::of(n, {0, 1});
    auto covers = covers_with_reducible_complement(sigma, 1);
    RationalPolytope body = random_polytope(n, BodyKind::unconditional, rng);
    LogConcaveFn chi = LogConcaveFn::indicator(body, Rational(1));
    LogConcaveFn gauss = LogConcaveFn::gaussian(VecD::Zero(n), VecD::Ones(n), 1.0);
    for (const auto& cover : covers) {
      reports.push_back(check_cor_marginals(chi, cover));
      reports.push_back(check_cor_marginals(gauss, cover));
    }
  }

  // Operator lower bound and min-product fixtures.
  {
    VecQ lo(1), hi(1);
    lo(0) = Rational(0);
    hi(0) = Rational(1);
    RationalPolytope seg01 = hull({lo, hi});
    RationalPolytope square = hanner(2, IndexSet::empty(2));
    LogConcaveFn f1 = LogConcaveFn::indicator(seg01, Rational(1));
    LogConcaveFn f2 = LogConcaveFn::indicator(square, Rational(1));
    reports.push_back(check_operator_lower_bound({f1, f2}));
    reports.push_back(check_min_prod({f1, f1}));
    LogConcaveFn half = LogConcaveFn::indicator(seg01, Rational(1, 2));
    reports.push_back(check_min_prod({f1, half}));
  }
  return reports;
}

int cmd_verify(const std::string& suite, const std::string& out, uint64_t seed) {
  std::string started = timestamp();
  std::vector<InequalityReport> reports;
  try {
    if (suite == "core" || suite == "all") {
      auto r = run_core_suite(seed);
      reports.insert(reports.end(), r.begin(), r.end());
    }
    if (suite == "functional" || suite == "all") {
      auto r = run_functional_suite(seed);
      reports.insert(reports.end(), r.begin(), r.end());
    }
    if (suite == "equality" || suite == "all") {
      auto r = equality_witness_suite();
      reports.insert(reports.end(), r.begin(), r.end());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: suite construction failed: " << e.what() << "\n";
    return 1;
  }
  if (reports.empty()) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return 2;
  }

  std::string id = manifest_id("verify", seed, suite);
  std::ofstream f(out);
  if (!f) {
    std::cerr << "error: cannot open output path " << out << "\n";
    return 2;
  }
  bool all_hold = true;
  for (const auto& r : reports) {
    json j = report_to_json(r);
    j["manifest"] = id;
    f << j.dump() << "\n";
    bool ok = r.holds;
    if (suite == "equality") ok = ok && r.equality;
    if (!ok) {
      all_hold = false;
      std::cerr << "FAIL " << r.id << " ratio=" << r.ratio.to_double() << "\n";
    }
  }
  f.close();
  json echo;
  echo["suite"] = suite;
  echo["seed"] = seed;
  if (int rc = write_manifest(out, "verify", id, echo, started, timestamp())) return rc;
  std::cout << reports.size() << " checks, " << (all_hold ? "all hold" : "FAILURES") << "\n";
  return all_hold ? 0 : 1;
}

int cmd_constants(int nmax, const std::string& out) {
  if (nmax > 100) {
    std::cerr << "error: nmax capped at 100\n";
    return 2;
  }
  std::string started = timestamp();
  std::string id = manifest_id("constants", 0, std::to_string(nmax));
  std::ofstream f(out);
  if (!f) {
    std::cerr << "error: cannot open output path " << out << "\n";
    return 2;
  }
  bool all_hold = true;

  {
    json j;
    j["id"] = "prop42.special_n4";
    j["n"] = 4;
    j["ratio"] = prop42_special_n4().frac_str();
    j["holds"] = prop42_special_n4() == Rational(945);
    j["manifest"] = id;
    all_hold = all_hold && j["holds"].get<bool>();
    f << j.dump() << "\n";
  }
  for (int n = 8; n <= nmax; ++n)
    for (int p = 2; 4 * p <= n; ++p) {
      ConstantComparison c = constant_ratio_prop41(n, p);
      json j;
      j["id"] = "prop41";
      j["n"] = n;
      j["p"] = p;
      j["ratio"] = c.ratio.frac_str();
      j["bound"] = c.bound;
      j["holds"] = c.holds;
      j["note"] = c.note;
      j["manifest"] = id;
      all_hold = all_hold && c.holds;
      f << j.dump() << "\n";
    }
  for (int n = 5; n <= nmax; ++n) {
    ConstantComparison c = constant_ratio_prop42(n);
    json j;
    j["id"] = "prop42";
    j["n"] = n;
    j["ratio"] = c.ratio.frac_str();
    j["bound"] = c.bound;
    j["holds"] = c.holds;
    j["note"] = c.note;
    j["manifest"] = id;
    all_hold = all_hold && c.holds;
    f << j.dump() << "\n";
  }
  f.close();
  json echo;
  echo["nmax"] = nmax;
  if (int rc = write_manifest(out, "constants", id, echo, started, timestamp())) return rc;
  std::cout << (all_hold ? "all constant comparisons hold" : "constant comparison FAILED") << "\n";
  return all_hold ? 0 : 1;
}

int cmd_search(const std::string& config_path, const std::string& out) {
  std::string started = timestamp();
  SearchConfig cfg;
  try {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot read config " << config_path << "\n";
      return 2;
    }
    json j = json::parse(in);
    cfg = config_from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "error: bad config: " << e.what() << "\n";
    return 2;
  }
  cfg.threads = thread_count_from_env();

  SearchSummary sum = search_conjecture(cfg);

  std::string id = manifest_id("search", cfg.seed, cfg.kind + std::to_string(cfg.trials));
  std::ofstream f(out);
  if (!f) {
    std::cerr << "error: cannot open output path " << out << "\n";
    return 2;
  }
  for (const auto& t : sum.trials) {
    json j = trial_to_json(t);
    j["manifest"] = id;
    f << j.dump() << "\n";
  }
  f.close();
  std::ofstream fs(out + ".summary.json");
  if (!fs) {
    std::cerr << "error: cannot write summary next to " << out << "\n";
    return 2;
  }
  fs << summary_to_json(sum).dump(2) << "\n";
  fs.close();
  if (int rc = write_manifest(out, "search", id, config_to_json(cfg), started, timestamp()))
    return rc;
  std::cout << "trials=" << sum.completed << " min_ratio=" << sum.min_ratio
            << " counterexamples=" << sum.counterexamples.size() << "\n";
  return sum.counterexamples.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cover inequality verification toolkit"};
  app.require_subcommand(1);

  std::string suite = "all", out = "reports.jsonl";
  uint64_t seed = 20250607;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "core | functional | equality | all");
  verify->add_option("--out", out, "JSONL output path");
  verify->add_option("--seed", seed, "RNG seed for randomized fixtures");

  int nmax = 20;
  std::string cout_path = "constants.jsonl";
  auto* constants = app.add_subcommand("constants", "tabulate constant-ratio bounds");
  constants->add_option("--nmax", nmax, "largest dimension (<= 100)");
  constants->add_option("--out", cout_path, "JSONL output path");

  std::string config_path, sout_path = "search.jsonl";
  auto* search = app.add_subcommand("search", "randomized conjecture search");
  search->add_option("--config", config_path, "JSON config file")->required();
  search->add_option("--out", sout_path, "JSONL trial log path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(suite, out, seed);
    if (constants->parsed()) return cmd_constants(nmax, cout_path);
    if (search->parsed()) return cmd_search(config_path, sout_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
