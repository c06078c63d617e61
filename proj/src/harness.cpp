#include "coverineq/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "coverineq/quadrature.hpp"

namespace coverineq {

// ---------------------------------------------------------------------------
// Cover catalogs
// ---------------------------------------------------------------------------

std::vector<std::vector<IndexSet>> set_partitions(const IndexSet& sigma, int min_blocks) {
  auto axes = sigma.axes();
  const int n = sigma.ground();
  std::vector<std::vector<IndexSet>> out;
  std::vector<IndexSet> current;
  // Restricted-growth assignment: each element joins an existing block or
  // opens a new one, so every partition appears exactly once.
  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == axes.size()) {
      if (static_cast<int>(current.size()) >= min_blocks) out.push_back(current);
      return;
    }
    IndexSet singleton = IndexSet::of(n, {axes[pos]});
    for (size_t b = 0; b < current.size(); ++b) {
      IndexSet saved = current[b];
      current[b] = current[b].unite(singleton);
      self(self, pos + 1);
      current[b] = saved;
    }
    current.push_back(singleton);
    self(self, pos + 1);
    current.pop_back();
  };
  rec(rec, 0);
  return out;
}

namespace {

std::string cover_key(const CoverFamily& c) {
  // Order-insensitive member multiset key for deduplication.
  std::vector<uint64_t> bits;
  for (const auto& m : c.members) bits.push_back(m.bits());
  std::sort(bits.begin(), bits.end());
  std::string key;
  for (uint64_t b : bits) key += std::to_string(b) + ",";
  return key;
}

}  // namespace

std::vector<CoverFamily> covers_with_reducible_complement(const IndexSet& sigma, int max_parts) {
  // Complements of concatenations of partitions of sigma.  The concatenation
  // of t partitions is a 1-reducible t-cover D; its complement family is an
  // (m - t)-cover whose complement is D again.
  std::vector<CoverFamily> out;
  if (sigma.size() < 2) return out;  // no partition with >= 2 blocks exists
  auto partitions = set_partitions(sigma, 2);
  std::vector<std::string> seen;
  auto add = [&](const std::vector<IndexSet>& reducible_members) {
    std::vector<IndexSet> members;
    for (const auto& d : reducible_members) members.push_back(sigma.minus(d));
    CoverFamily c = validate_cover(members, sigma);
    std::string key = cover_key(c);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(std::move(c));
    }
  };
  for (const auto& p : partitions) add(p);
  if (max_parts >= 2) {
    for (size_t i = 0; i < partitions.size(); ++i)
      for (size_t j = i; j < partitions.size(); ++j) {
        std::vector<IndexSet> cat = partitions[i];
        cat.insert(cat.end(), partitions[j].begin(), partitions[j].end());
        add(cat);
      }
  }
  return out;
}

std::vector<CoverFamily> reducible_covers_of_full(int n, int max_s) {
  IndexSet full = IndexSet::full(n);
  auto partitions = set_partitions(full, 1);
  std::vector<CoverFamily> out;
  std::vector<std::string> seen;
  auto add = [&](const std::vector<IndexSet>& members) {
    CoverFamily c = validate_cover(members, full);
    std::string key = cover_key(c);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(std::move(c));
    }
  };
  for (const auto& p : partitions) add(p);
  if (max_s >= 2) {
    for (size_t i = 0; i < partitions.size(); ++i)
      for (size_t j = i; j < partitions.size(); ++j) {
        std::vector<IndexSet> cat = partitions[i];
        cat.insert(cat.end(), partitions[j].begin(), partitions[j].end());
        add(cat);
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture search
// ---------------------------------------------------------------------------

CoverFamily random_admissible_cover(const IndexSet& sigma, int m_lo, int m_hi, int s_lo,
                                    int s_hi, Rng& rng) {
  const int size = sigma.size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    int s = rng.next_int(s_lo, s_hi);
    int mmin = std::max(m_lo, s + 1);
    int mmax = std::min(m_hi, s * size);
    if (mmax < mmin) continue;
    int m = rng.next_int(mmin, mmax);
    try {
      return random_cover(sigma, m, s, rng);
    } catch (const GenerationFailed&) {
      continue;
    }
  }
  // Singleton bases (and unlucky draws): the m-fold repetition of sigma.
  int m = std::max(2, m_lo);
  std::vector<IndexSet> members(m, sigma);
  return validate_cover(members, sigma);
}

namespace {

IndexSet random_proper_subset(int n, Rng& rng) {
  // Nonempty proper subset, uniform over sizes then elements.
  int size = rng.next_int(1, n - 1);
  std::vector<int> axes(n);
  for (int i = 0; i < n; ++i) axes[i] = i;
  for (int k = 0; k < size; ++k) {
    int pick = k + static_cast<int>(rng.next_below(static_cast<uint64_t>(n - k)));
    std::swap(axes[k], axes[pick]);
  }
  return IndexSet::of(n, std::vector<int>(axes.begin(), axes.begin() + size));
}

TrialRecord run_trial(const SearchConfig& cfg, int index) {
  Rng rng = Rng::derive(cfg.seed, static_cast<uint64_t>(index));
  TrialRecord rec;
  rec.index = index;
  try {
    const int n = rng.next_int(cfg.dim_lo, cfg.dim_hi);
    rec.dim = n;
    std::string kind = cfg.kind;
    if (kind == "mixed") {
      const char* kinds[] = {"general", "unconditional", "product", "hanner"};
      kind = kinds[rng.next_below(4)];
    } else if (kind == "exact_mix") {  // exact-path bodies only
      kind = rng.next_below(2) ? "unconditional" : "product";
    }
    rec.kind = kind;
    IndexSet sigma = random_proper_subset(n, rng);
    CoverFamily cover =
        random_admissible_cover(sigma, cfg.m_lo, cfg.m_hi, cfg.s_lo, cfg.s_hi, rng);

    RationalPolytope body;
    bool product_exact = false;
    if (kind == "general") {
      body = random_polytope(n, BodyKind::general, rng);
    } else if (kind == "unconditional") {
      body = random_polytope(n, BodyKind::unconditional, rng);
    } else if (kind == "product") {
      body = random_product_polytope(n, sigma, rng);
      product_exact = true;
    } else if (kind == "hanner") {
      body = hanner(n, sigma);
    } else {
      throw GenerationFailed("unknown body kind '" + kind + "'");
    }

    InequalityReport rep = conjecture_ratio(body, cover, product_exact);
    rec.body = polytope_to_json(body);
    rec.cover = cover_to_json(cover);
    if (rep.anchor) {
      json a = json::array();
      for (Eigen::Index i = 0; i < rep.anchor->size(); ++i) a.push_back((*rep.anchor)(i).str());
      rec.anchor = a;
    }
    rec.exact = rep.exact;
    rec.ratio = rep.ratio.to_double();
    if (rep.ratio.is_exact()) rec.ratio_frac = rep.ratio.rational().frac_str();
    try {
      CoverFamily comp = complement_cover(cover);
      rec.theorem_regime = is_one_reducible(comp).has_value();
    } catch (const MemberEqualsBase&) {
      rec.theorem_regime = false;
    }

    if (rep.exact) {
      rec.ok = rep.holds;
    } else {
      // Quarantine policy: a numeric dip below 1 - 3*tol gets a second run
      // at doubled search effort before counting as a counterexample.
      bool suspicious = rec.ratio < 1.0 - 3.0 * cfg.tolerance;
      if (suspicious) {
        InequalityReport retry = conjecture_ratio(body, cover, false, 4);
        rec.ratio = retry.ratio.to_double();
        rec.note = "re-ran at doubled effort after a suspicious ratio";
        rec.ok = rec.ratio >= 1.0 - cfg.tolerance;
      } else {
        rec.ok = rec.ratio >= 1.0 - cfg.tolerance;
      }
    }
  } catch (const GenerationFailed& e) {
    rec.ok = true;
    rec.note = std::string("generation failed: ") + e.what();
    rec.ratio = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

}  // namespace

SearchSummary search_conjecture(const SearchConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("search_conjecture: trials must be >= 1");
  SearchSummary sum;
  sum.cfg = cfg;
  sum.trials.resize(cfg.trials);

  const int threads = std::max(1, cfg.threads);
  std::atomic<int> next{0};
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= cfg.trials) break;
      sum.trials[i] = run_trial(cfg, i);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Order-independent aggregation over the per-index records.
  bool have_min = false;
  for (const auto& t : sum.trials) {
    if (!t.note.empty() && t.note.rfind("generation failed", 0) == 0) {
      ++sum.generation_failures;
      continue;
    }
    ++sum.completed;
    if (t.exact) ++sum.exact_count; else ++sum.numeric_count;
    if (t.theorem_regime) ++sum.theorem_count;
    if (!have_min || t.ratio < sum.min_ratio) {
      have_min = true;
      sum.min_ratio = t.ratio;
      sum.min_ratio_frac = t.ratio_frac;
      sum.min_witness = t;
    }
    if (!t.ok) sum.counterexamples.push_back(t);
    else if (t.ratio < 1.05 && sum.near_tight.size() < 32) sum.near_tight.push_back(t);
  }
  return sum;
}

json trial_to_json(const TrialRecord& t) {
  json j;
  j["trial"] = t.index;
  j["dim"] = t.dim;
  j["kind"] = t.kind;
  j["body"] = t.body;
  j["cover"] = t.cover;
  if (!t.anchor.is_null()) j["anchor"] = t.anchor;
  if (std::isnan(t.ratio)) j["ratio"] = "nan";
  else j["ratio"] = t.ratio;
  if (!t.ratio_frac.empty()) j["ratio_frac"] = t.ratio_frac;
  j["path"] = t.exact ? "exact" : "numeric";
  j["regime"] = t.theorem_regime ? "theorem" : "conjecture";
  j["ok"] = t.ok;
  if (!t.note.empty()) j["note"] = t.note;
  return j;
}

json config_to_json(const SearchConfig& cfg) {
  json j;
  j["trials"] = cfg.trials;
  j["dims"] = {cfg.dim_lo, cfg.dim_hi};
  j["m"] = {cfg.m_lo, cfg.m_hi};
  j["s"] = {cfg.s_lo, cfg.s_hi};
  j["kind"] = cfg.kind;
  j["seed"] = cfg.seed;
  j["tolerance"] = cfg.tolerance;
  return j;
}

SearchConfig config_from_json(const json& j) {
  SearchConfig cfg;
  if (j.contains("trials")) cfg.trials = j.at("trials").get<int>();
  if (j.contains("dims")) {
    cfg.dim_lo = j.at("dims")[0].get<int>();
    cfg.dim_hi = j.at("dims")[1].get<int>();
  }
  if (j.contains("m")) {
    cfg.m_lo = j.at("m")[0].get<int>();
    cfg.m_hi = j.at("m")[1].get<int>();
  }
  if (j.contains("s")) {
    cfg.s_lo = j.at("s")[0].get<int>();
    cfg.s_hi = j.at("s")[1].get<int>();
  }
  if (j.contains("kind")) cfg.kind = j.at("kind").get<std::string>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
  if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
  if (cfg.dim_lo < 2 || cfg.dim_hi > 6 || cfg.dim_lo > cfg.dim_hi)
    throw std::invalid_argument("config: dims out of range");
  return cfg;
}

json summary_to_json(const SearchSummary& s) {
  json j;
  j["config"] = config_to_json(s.cfg);
  j["completed"] = s.completed;
  j["generation_failures"] = s.generation_failures;
  j["exact_trials"] = s.exact_count;
  j["numeric_trials"] = s.numeric_count;
  j["theorem_regime_trials"] = s.theorem_count;
  j["min_ratio"] = s.min_ratio;
  if (!s.min_ratio_frac.empty()) j["min_ratio_frac"] = s.min_ratio_frac;
  if (s.min_witness) j["min_witness"] = trial_to_json(*s.min_witness);
  json cx = json::array();
  for (const auto& t : s.counterexamples) cx.push_back(trial_to_json(t));
  j["counterexamples"] = cx;
  json nt = json::array();
  for (const auto& t : s.near_tight) nt.push_back(trial_to_json(t));
  j["near_tight"] = nt;
  return j;
}

// ---------------------------------------------------------------------------
// Final proposition and equality witnesses
// ---------------------------------------------------------------------------

InequalityReport verify_final_proposition(int n, const IndexSet& sigma,
                                          const CoverFamily& cover, uint64_t seed) {
  if (cover.base != sigma) throw InvalidCover("verify_final_proposition: cover base mismatch");
  Rng rng(seed);
  const int k = sigma.size(), w = n - k;
  auto make_factor = [&](int d) {
    if (d == 1) {
      Rational a = rng.next_rational_unit(8);
      VecQ lo(1), hi(1);
      lo(0) = -a;
      hi(0) = a;
      return hull({lo, hi});
    }
    return random_polytope(d, BodyKind::unconditional, rng);
  };
  RationalPolytope c = make_factor(k);
  RationalPolytope wbody = make_factor(w);

  auto caxes = sigma.axes();
  auto waxes = sigma.complement().axes();
  std::vector<VecQ> pts;
  for (const auto& vc : c.vertices())
    for (const auto& vw : wbody.vertices()) {
      VecQ v = vecq_zero(n);
      for (int i = 0; i < k; ++i) v(caxes[i]) = vc(i);
      for (int i = 0; i < w; ++i) v(waxes[i]) = vw(i);
      pts.push_back(std::move(v));
    }
  RationalPolytope body = hull(pts);

  InequalityReport rep = conjecture_ratio(body, cover, true);
  // Product structure: parallel sections are constant; verify on samples.
  RationalPolytope proj = project(body, sigma);
  Rational at_zero = section(body, CoordinateFlat{sigma, vecq_zero(k)}).volume();
  Rational half(1, 2);
  for (size_t i = 0; i < proj.vertices().size() && i < 3; ++i) {
    VecQ anchor(k);
    for (int c2 = 0; c2 < k; ++c2) anchor(c2) = proj.vertices()[i](c2) * half;
    Rational v = section(body, CoordinateFlat{sigma, anchor}).volume();
    if (v != at_zero) {
      rep.holds = false;
      rep.notes.push_back("product body sections are not constant");
      return rep;
    }
  }
  rep.notes.push_back("section volume constant over sampled anchors");
  return rep;
}

std::vector<InequalityReport> equality_witness_suite() {
  std::vector<InequalityReport> out;

  // Hanner bodies meet the sharp local inequality with equality for every
  // admissible cover.
  for (int n = 2; n <= 4; ++n) {
    for (uint64_t bits = 1; bits < (uint64_t{1} << n) - 1; ++bits) {
      IndexSet sigma(n, bits);
      if (sigma.size() < 2) continue;
      RationalPolytope k = hanner(n, sigma);
      for (const auto& cover : covers_with_reducible_complement(sigma, 2)) {
        InequalityReport r = check_thm_sharp_local(k, cover);
        r.notes.push_back("hanner witness n=" + std::to_string(n) + " sigma=" + sigma.str());
        out.push_back(std::move(r));
      }
    }
  }

  // Functional equality witnesses: indicator of a block hull matched to the
  // induced 1-cover of a reducible cover.
  for (int n = 2; n <= 4; ++n) {
    auto covers = reducible_covers_of_full(n, 2);
    if (covers.size() > 40) covers.resize(40);
    for (const auto& cover : covers) {
      auto blocks_sets = induced_one_cover(cover);
      std::vector<Block> blocks;
      for (const auto& b : blocks_sets)
        blocks.push_back(Block{hanner(b.size(), IndexSet::full(b.size())), vecq_zero(b.size())});
      // Induced blocks are contiguous only up to relabeling; build the body
      // in block-sorted coordinates and relabel axes back.
      std::vector<int> order;
      for (const auto& b : blocks_sets)
        for (int a : b.axes()) order.push_back(a);
      RationalPolytope c_sorted = conv_of_blocks(blocks);
      std::vector<VecQ> pts;
      for (const auto& v : c_sorted.vertices()) {
        VecQ q = vecq_zero(n);
        for (int i = 0; i < n; ++i) q(order[i]) = v(i);
        pts.push_back(std::move(q));
      }
      LogConcaveFn f = LogConcaveFn::indicator(hull(pts), Rational(1));
      InequalityReport r = check_functional_rs(f, cover);
      r.notes.push_back("block-hull witness");
      out.push_back(std::move(r));
    }
  }

  // Cross-polytopes meet the section inequality with equality for every
  // cover of the full index set.
  for (int n = 2; n <= 4; ++n) {
    RationalPolytope k = hanner(n, IndexSet::full(n));
    auto covers = reducible_covers_of_full(n, 2);
    if (covers.size() > 40) covers.resize(40);
    for (const auto& cover : covers) {
      if (cover.member_count() < 2) continue;
      InequalityReport r = check_liakopoulos(k, cover);
      r.notes.push_back("cross-polytope witness");
      out.push_back(std::move(r));
    }
    // Loomis-Whitney style (n-1)-cover, not reducible for n = 3.
    std::vector<IndexSet> lw;
    for (int i = 0; i < n; ++i) lw.push_back(IndexSet::full(n).minus(IndexSet::of(n, {i})));
    InequalityReport r = check_liakopoulos(k, validate_cover(lw, IndexSet::full(n)));
    r.notes.push_back("cross-polytope, complement-of-singletons cover");
    out.push_back(std::move(r));
  }

  // Product witnesses for the sharp local inequality: block hull in the base
  // coordinates times a cube.
  {
    struct Case {
      int n;
      IndexSet sigma;
    };
    std::vector<Case> cases{{3, IndexSet::of(3, {0, 1})},
                            {4, IndexSet::of(4, {0, 1, 2})},
                            {4, IndexSet::of(4, {1, 3})}};
    for (const auto& cs : cases) {
      for (const auto& cover : covers_with_reducible_complement(cs.sigma, 1)) {
        auto induced = induced_one_cover(cover);
        std::vector<Block> blocks;
        for (const auto& b : induced)
          blocks.push_back(Block{hanner(b.size(), IndexSet::full(b.size())), vecq_zero(b.size())});
        RationalPolytope c_sorted = conv_of_blocks(blocks);
        std::vector<int> order;
        for (const auto& b : induced)
          for (int a : b.axes()) order.push_back(a);
        auto comp_axes = cs.sigma.complement().axes();
        RationalPolytope cube = hanner(cs.n - cs.sigma.size(), IndexSet::empty(cs.n - cs.sigma.size()));
        std::vector<VecQ> pts;
        for (const auto& vc : c_sorted.vertices())
          for (const auto& vw : cube.vertices()) {
            VecQ v = vecq_zero(cs.n);
            // order[i] is the global axis of the i-th block-ordered coordinate
            for (size_t i = 0; i < order.size(); ++i) v(order[i]) = vc(i);
            for (int i = 0; i < static_cast<int>(comp_axes.size()); ++i) v(comp_axes[i]) = vw(i);
            pts.push_back(std::move(v));
          }
        InequalityReport r = check_thm_sharp_local(hull(pts), cover);
        r.notes.push_back("block-hull x cube witness");
        out.push_back(std::move(r));
      }
    }
  }

  // Block-hull volume identity with anchors inside the blocks.
  {
    VecQ seg_lo(1), seg_hi(1);
    seg_lo(0) = Rational(0);
    seg_hi(0) = Rational(1);
    RationalPolytope unit_seg = hull({seg_lo, seg_hi});
    RationalPolytope unit_sq = hanner(2, IndexSet::empty(2));
    std::vector<Block> blocks{{unit_seg, vecq_zero(1)}, {unit_sq, vecq_zero(2)}};
    InequalityReport r = check_lemma_conv_blocks(blocks);
    r.notes.push_back("segment x square blocks, zero anchors");
    out.push_back(std::move(r));
  }

  return out;
}

// ---------------------------------------------------------------------------
// Brute oracles
// ---------------------------------------------------------------------------

namespace {

OracleComparison oracle_liakopoulos(int res) {
  OracleComparison cmp;
  cmp.id = "liakopoulos";
  RationalPolytope k = hanner(3, IndexSet::full(3));  // cross-polytope
  CoverFamily cover = validate_cover({IndexSet::of(3, {0}), IndexSet::of(3, {1, 2})},
                                     IndexSet::full(3));
  InequalityReport rep = check_liakopoulos(k, cover);
  cmp.lhs_pipeline = rep.lhs.to_double();
  cmp.rhs_pipeline = rep.rhs.to_double();

  // Midpoint counting on [-1,1]^d grids, fully independent of the hull code.
  auto norm1_inside = [](double x, double y, double z) {
    return std::abs(x) + std::abs(y) + std::abs(z) <= 1.0;
  };
  const double h = 2.0 / res;
  long hits = 0;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j)
      for (int l = 0; l < res; ++l)
        if (norm1_inside(-1 + (i + 0.5) * h, -1 + (j + 0.5) * h, -1 + (l + 0.5) * h)) ++hits;
  double vol = hits * h * h * h;
  long seg_hits = 0;
  for (int i = 0; i < res; ++i)
    if (std::abs(-1 + (i + 0.5) * h) <= 1.0) ++seg_hits;
  double seg = seg_hits * h;
  long sq_hits = 0;
  for (int i = 0; i < res; ++i)
    for (int j = 0; j < res; ++j)
      if (std::abs(-1 + (i + 0.5) * h) + std::abs(-1 + (j + 0.5) * h) <= 1.0) ++sq_hits;
  double cross2 = sq_hits * h * h;

  cmp.lhs_oracle = vol;  // s = 1
  cmp.rhs_oracle = (1.0 * 2.0 / 6.0) * seg * cross2;
  cmp.discrepancy = std::max(std::abs(cmp.lhs_pipeline - cmp.lhs_oracle) / cmp.lhs_pipeline,
                             std::abs(cmp.rhs_pipeline - cmp.rhs_oracle) / cmp.rhs_pipeline);
  cmp.ok = cmp.discrepancy < 0.01;
  return cmp;
}

OracleComparison oracle_lemma31(int res) {
  OracleComparison cmp;
  cmp.id = "lemma31";
  const double T = 40.0;
  VecQ lo(1), hi(1);
  lo(0) = Rational(0);
  hi(0) = Rational::from_double(T);
  RationalPolytope support = hull({lo, hi});
  AffinePiece decay{vecq(std::initializer_list<Rational>{Rational(-1)}), Rational(0)};
  LogConcaveFn f = LogConcaveFn::exp_concave_pl(support, {decay});
  InequalityReport rep = check_min_prod({f, f});
  cmp.lhs_pipeline = rep.lhs.to_double();
  cmp.rhs_pipeline = rep.rhs.to_double();

  // Iterated Simpson with the inner kink located by bisection; independent
  // of the layer-cake path used by the pipeline.
  auto f1 = [T](double x) { return x >= 0 && x <= T ? std::exp(-x) : 0.0; };
  double tol = std::pow(10.0, -std::min(res, 12));
  auto inner = [&, T](double x) {
    double fx = f1(x);
    auto g = [&](double y) { return std::min(fx, f1(y)); };
    // kink where f1(y) crosses fx
    double a = 0, b = T;
    for (int it = 0; it < 80; ++it) {
      double mid = 0.5 * (a + b);
      if (f1(mid) > fx) a = mid;
      else b = mid;
    }
    double split = 0.5 * (a + b);
    return adaptive_simpson(g, 0, split, tol) + adaptive_simpson(g, split, T, tol);
  };
  cmp.lhs_oracle = adaptive_simpson(inner, 0, T, tol);
  cmp.rhs_oracle = adaptive_simpson(f1, 0, T, tol);
  cmp.rhs_oracle *= cmp.rhs_oracle;
  cmp.discrepancy = std::max(std::abs(cmp.lhs_pipeline - cmp.lhs_oracle) / cmp.lhs_oracle,
                             std::abs(cmp.rhs_pipeline - cmp.rhs_oracle) / cmp.rhs_oracle);
  cmp.ok = cmp.discrepancy < 0.01;
  return cmp;
}

OracleComparison oracle_volume(int bodies) {
  OracleComparison cmp;
  cmp.id = "volume";
  double worst = 0.0;
  for (int i = 0; i < bodies; ++i) {
    Rng rng = Rng::derive(424242, static_cast<uint64_t>(i));
    BodyKind kind = i % 2 == 0 ? BodyKind::general : BodyKind::unconditional;
    RationalPolytope p = random_polytope(2 + i % 3, kind, rng);
    McVolume mc = mc_volume(p, 200000, 1000 + i);
    double exact = p.volume().to_double();
    double dev = std::abs(mc.estimate - exact) / std::max(3.0 * mc.stderr_, 1e-12);
    worst = std::max(worst, dev);
    if (i == 0) {
      cmp.lhs_pipeline = exact;
      cmp.lhs_oracle = mc.estimate;
    }
  }
  cmp.discrepancy = worst;  // in units of 3*stderr
  cmp.ok = worst <= 1.0;
  return cmp;
}

}  // namespace

OracleComparison brute_oracle_small(const std::string& id, int resolution) {
  if (id == "liakopoulos") return oracle_liakopoulos(resolution);
  if (id == "lemma31") return oracle_lemma31(resolution);
  if (id == "volume") return oracle_volume(std::max(resolution, 1));
  throw std::invalid_argument("brute_oracle_small: unsupported id '" + id + "'");
}

}  // namespace coverineq
