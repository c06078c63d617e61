#include "coverineq/inequalities.hpp"

#include <algorithm>
#include <cmath>

#include "coverineq/constants.hpp"
#include "coverineq/quadrature.hpp"

namespace coverineq {

namespace {

void require_base_full(const CoverFamily& cover, int n, const char* where) {
  if (cover.base.ground() != n || cover.base != IndexSet::full(n))
    throw InvalidCover(std::string(where) + ": cover base must be the whole index set");
}

void require_base_proper(const CoverFamily& cover, int n, const char* where) {
  if (cover.base.ground() != n)
    throw InvalidCover(std::string(where) + ": cover ground set mismatch");
  if (cover.base == IndexSet::full(n))
    throw InvalidCover(std::string(where) + ": cover base must be a proper subset");
}

void require_origin(const RationalPolytope& k, const char* where) {
  if (!k.contains(vecq_zero(k.dim())))
    throw OriginOutside(std::string(where) + ": origin is not in the body");
}

// Exact volume of K intersected with the coordinate subspace spanned by the
// axes of `span` (section through 0, reduced to those coordinates).
Rational subspace_section_volume(const RationalPolytope& k, const IndexSet& span) {
  IndexSet fixed = span.complement();
  if (fixed.empty_set()) return k.volume();
  RationalPolytope s = section(k, CoordinateFlat{fixed, vecq_zero(fixed.size())});
  return s.volume();
}

void finalize(InequalityReport& r) {
  r.exact = r.lhs.is_exact() && r.rhs.is_exact();
  r.tolerance = r.exact ? 0.0 : kNumericTolerance;
  r.ratio = r.lhs / r.rhs;
  r.equality = r.exact && r.lhs.rational() == r.rhs.rational();
  r.holds = Value::at_least(r.lhs, r.rhs, r.tolerance);
}

// Max-section term: exact at the origin for centrally symmetric bodies,
// heuristic ascent otherwise; the report records the anchor used.
Value max_section_value(const RationalPolytope& k, const IndexSet& sigma, InequalityReport& r,
                        int effort = 1) {
  MaxSectionResult ms = max_parallel_section(k, sigma, effort);
  r.anchor = ms.anchor;
  if (ms.exact_max) return Value::exact(ms.value);
  r.notes.push_back("max-section anchor from heuristic concave ascent");
  return Value::approx(ms.value.to_double());
}

}  // namespace

InequalityReport check_bollobas_thomason(const RationalPolytope& k, const CoverFamily& cover) {
  if (!k.full_dimensional()) throw InequalityError("bollobas_thomason: body must be full-dimensional");
  require_base_full(cover, k.dim(), "bollobas_thomason");
  InequalityReport r;
  r.id = "eq1.bollobas_thomason";
  r.cover = cover;
  r.constant = Rational(1);
  Rational prod(1);
  for (const auto& member : cover.members) prod *= project(k, member).volume();
  r.lhs = Value::exact(prod);
  r.rhs = Value::exact(k.volume().pow(cover.multiplicity));
  finalize(r);
  return r;
}

InequalityReport check_local_bt(const RationalPolytope& k, const CoverFamily& cover) {
  if (!k.full_dimensional()) throw InequalityError("local_bt: body must be full-dimensional");
  const int n = k.dim();
  require_base_proper(cover, n, "local_bt");
  const int m = cover.member_count(), s = cover.multiplicity;
  const int codim = n - cover.base.size();

  Rational constant(1);
  for (const auto& member : cover.members)
    constant *= constant_table::binomial_q(n - member.size(), codim);
  constant /= constant_table::binomial_q(n, codim).pow(m - s);

  InequalityReport r;
  r.id = "eq2.local_bt";
  r.cover = cover;
  r.constant = constant;
  Rational prod(1);
  for (const auto& member : cover.members) prod *= project(k, member.complement()).volume();
  r.lhs = Value::exact(constant * prod);
  r.rhs = Value::exact(k.volume().pow(m - s) *
                       project(k, cover.base.complement()).volume().pow(s));
  finalize(r);
  return r;
}

InequalityReport check_liakopoulos(const RationalPolytope& k, const CoverFamily& cover) {
  if (!k.full_dimensional()) throw InequalityError("liakopoulos: body must be full-dimensional");
  const int n = k.dim();
  require_base_full(cover, n, "liakopoulos");
  require_origin(k, "liakopoulos");
  const int s = cover.multiplicity;

  Rational constant(1);
  for (const auto& member : cover.members) constant *= constant_table::factorial_q(member.size());
  constant /= constant_table::factorial_q(n).pow(s);

  InequalityReport r;
  r.id = "eq3.liakopoulos";
  r.cover = cover;
  r.constant = constant;
  Rational prod(1);
  for (const auto& member : cover.members) prod *= subspace_section_volume(k, member);
  r.lhs = Value::exact(k.volume().pow(s));
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  return r;
}

InequalityReport check_local_meyer_abbc(const RationalPolytope& k, const CoverFamily& cover,
                                        bool swapped) {
  if (!k.full_dimensional()) throw InequalityError("local_meyer: body must be full-dimensional");
  const int n = k.dim();
  require_base_proper(cover, n, "local_meyer");
  require_origin(k, "local_meyer");
  const int m = cover.member_count(), s = cover.multiplicity;
  const int base_size = cover.base.size();

  Rational constant(1);
  for (const auto& member : cover.members)
    constant *= constant_table::factorial_q(base_size - member.size());
  constant /= constant_table::factorial_q(n * (m - s));

  InequalityReport r;
  r.id = swapped ? "eq4.local_meyer_abbc.swapped" : "eq4.local_meyer_abbc";
  r.cover = cover;
  r.constant = constant;
  Value maxsec = max_section_value(k, cover.base, r);
  const int vol_exp = swapped ? s : m - s;
  const int max_exp = swapped ? m - s : s;
  r.lhs = Value::exact(k.volume()).pow(vol_exp) * maxsec.pow(max_exp);
  Rational prod(1);
  for (const auto& member : cover.members)
    prod *= subspace_section_volume(k, member.complement());
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  if (swapped) r.notes.push_back("exponent roles of s and m-s interchanged; not asserted");
  return r;
}

InequalityReport check_aagjv_s1(const RationalPolytope& k, const CoverFamily& cover) {
  if (cover.member_count() != 2 || cover.multiplicity != 1)
    throw InvalidCover("aagjv_s1: requires a two-member 1-cover");
  if (!k.full_dimensional()) throw InequalityError("aagjv_s1: body must be full-dimensional");
  const int n = k.dim();
  require_base_proper(cover, n, "aagjv_s1");
  require_origin(k, "aagjv_s1");

  Rational constant = constant_table::factorial_q(cover.members[0].size()) *
                      constant_table::factorial_q(cover.members[1].size()) /
                      constant_table::factorial_q(cover.base.size());

  InequalityReport r;
  r.id = "eq5.aagjv_s1";
  r.cover = cover;
  r.constant = constant;
  Value maxsec = max_section_value(k, cover.base, r);
  r.lhs = Value::exact(k.volume()) * maxsec;
  Rational prod = subspace_section_volume(k, cover.members[0].complement()) *
                  subspace_section_volume(k, cover.members[1].complement());
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  return r;
}

namespace {

InequalityReport sharp_local_core(const RationalPolytope& k, const CoverFamily& cover,
                                  const char* id, bool exact_anchor_zero,
                                  bool require_reducible, int effort = 1) {
  if (!k.full_dimensional())
    throw InequalityError("sharp_local: body must be full-dimensional");
  const int n = k.dim();
  require_base_proper(cover, n, "sharp_local");
  require_origin(k, "sharp_local");
  const int m = cover.member_count(), s = cover.multiplicity;
  const int base_size = cover.base.size();

  InequalityReport r;
  r.id = id;
  r.cover = cover;

  if (require_reducible) {
    CoverFamily comp = [&] {
      try {
        return complement_cover(cover);
      } catch (const MemberEqualsBase& e) {
        throw NotReducible(std::string("sharp_local: ") + e.what());
      }
    }();
    if (!is_one_reducible(comp))
      throw NotReducible("sharp_local: complement cover is not 1-reducible");
  }
  r.induced = induced_one_cover(cover);

  Rational constant(1);
  for (const auto& member : cover.members)
    constant *= constant_table::factorial_q(base_size - member.size());
  constant /= constant_table::factorial_q(base_size).pow(m - s);
  r.constant = constant;

  Value maxsec;
  if (exact_anchor_zero) {
    VecQ origin = vecq_zero(base_size);
    RationalPolytope sec = section(k, CoordinateFlat{cover.base, origin});
    r.anchor = origin;
    maxsec = Value::exact(sec.volume());
    r.notes.push_back("anchor 0 exact by product structure");
  } else {
    maxsec = max_section_value(k, cover.base, r, effort);
  }
  r.lhs = Value::exact(k.volume()).pow(m - s) * maxsec.pow(s);
  Rational prod(1);
  for (const auto& member : cover.members)
    prod *= subspace_section_volume(k, member.complement());
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  return r;
}

}  // namespace

InequalityReport check_thm_sharp_local(const RationalPolytope& k, const CoverFamily& cover) {
  return sharp_local_core(k, cover, "thm1.2.sharp_local", false, true);
}

InequalityReport conjecture_ratio(const RationalPolytope& k, const CoverFamily& cover,
                                  bool exact_anchor_zero, int effort) {
  return sharp_local_core(k, cover, "conjecture1.5", exact_anchor_zero, false, effort);
}

InequalityReport check_functional_rs(const LogConcaveFn& f, const CoverFamily& cover) {
  const int n = f.dim();
  require_base_full(cover, n, "functional_rs");
  if (!is_one_reducible(cover))
    throw NotReducible("functional_rs: cover is not 1-reducible");
  const int m = cover.member_count(), s = cover.multiplicity;

  Rational constant(1);
  for (const auto& member : cover.members) constant *= constant_table::factorial_q(member.size());
  constant /= constant_table::factorial_q(n).pow(s);

  InequalityReport r;
  r.id = "thm1.1.functional_rs";
  r.cover = cover;
  r.induced = induced_one_cover(cover);
  r.constant = constant;
  r.lhs = f.sup_norm().pow(m - s) * integrate(f).pow(s);
  Value prod = Value::exact(Rational(1));
  for (const auto& member : cover.members) prod = prod * integrate_restricted(f, member);
  r.rhs = Value::exact(constant) * prod;
  finalize(r);
  return r;
}

InequalityReport check_cor_marginals(const LogConcaveFn& f, const CoverFamily& cover) {
  const int n = f.dim();
  require_base_proper(cover, n, "cor_marginals");
  const int m = cover.member_count(), s = cover.multiplicity;
  const int base_size = cover.base.size();

  CoverFamily comp = [&] {
    try {
      return complement_cover(cover);
    } catch (const MemberEqualsBase& e) {
      throw NotReducible(std::string("cor_marginals: ") + e.what());
    }
  }();
  if (!is_one_reducible(comp))
    throw NotReducible("cor_marginals: complement cover is not 1-reducible");

  Rational constant(1);
  for (const auto& member : cover.members)
    constant *= constant_table::factorial_q(base_size - member.size());
  constant /= constant_table::factorial_q(base_size).pow(m - s);

  InequalityReport r;
  r.id = "cor2.4.marginals";
  r.cover = cover;
  r.induced = induced_one_cover(cover);
  r.constant = constant;
  MaxMarginalResult mm = max_marginal(f, cover.base);
  r.anchor = mm.anchor;
  Value maxmarg = mm.exact_max ? mm.value : Value::approx(mm.value.to_double());
  if (!mm.exact_max) r.notes.push_back("max-marginal anchor from heuristic concave ascent");
  r.lhs = maxmarg.pow(s) * integrate(f).pow(m - s);
  Value prod = Value::exact(Rational(1));
  for (const auto& member : cover.members)
    prod = prod * integrate_restricted(f, member.complement());
  r.rhs = Value::exact(constant) * prod;
  finalize(r);
  return r;
}

InequalityReport check_abbc_original(const RationalPolytope& k, const CoverFamily& cover,
                                     bool swapped) {
  if (!k.full_dimensional()) throw InequalityError("abbc_original: body must be full-dimensional");
  const int n = k.dim();
  require_base_proper(cover, n, "abbc_original");
  require_origin(k, "abbc_original");
  const int m = cover.member_count(), s = cover.multiplicity;

  Rational constant(1);
  for (const auto& member : cover.members) constant *= constant_table::factorial_q(member.size());
  constant /= constant_table::factorial_q(n * s);

  InequalityReport r;
  r.id = swapped ? "eq7.abbc_original.swapped" : "eq7.abbc_original";
  r.cover = cover;
  r.constant = constant;
  Value maxsec = max_section_value(k, cover.base, r);
  const int vol_exp = swapped ? m - s : s;
  const int max_exp = swapped ? s : m - s;
  r.lhs = Value::exact(k.volume()).pow(vol_exp) * maxsec.pow(max_exp);
  Rational prod(1);
  for (const auto& member : cover.members) {
    // K cap (H_sigma_i + H_sigma^perp): free axes are member + base complement.
    IndexSet span = member.unite(cover.base.complement());
    prod *= subspace_section_volume(k, span);
  }
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  if (swapped) r.notes.push_back("exponent roles of s and m-s interchanged; not asserted");
  return r;
}

InequalityReport check_unconditional_improved(const RationalPolytope& k, const IndexSet& sigma) {
  if (!k.full_dimensional())
    throw InequalityError("unconditional_improved: body must be full-dimensional");
  const int n = k.dim();
  if (sigma.ground() != n || sigma.empty_set() || sigma.size() >= n)
    throw InequalityError("unconditional_improved: sigma must be nonempty and proper");
  if (!is_unconditional(k))
    throw NotUnconditional("unconditional_improved: body fails the sign-orbit test");
  const int p = sigma.size();

  Rational constant = constant_table::factorial_q(p) / Rational(n).pow(p);

  InequalityReport r;
  r.id = "thm1.4.unconditional";
  r.constant = constant;
  std::vector<IndexSet> members;
  for (int j : sigma.axes()) members.push_back(sigma.minus(IndexSet::of(n, {j})));
  if (p > 1) r.cover = validate_cover(members, sigma);

  r.lhs = Value::exact(k.volume().pow(p - 1) * subspace_section_volume(k, sigma.complement()));
  Rational prod(1);
  for (int j : sigma.axes())
    prod *= subspace_section_volume(k, IndexSet::of(n, {j}).complement());
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  return r;
}

InequalityReport check_lemma_conv_blocks(const std::vector<Block>& blocks) {
  InequalityReport r;
  r.id = "lemma2.1.conv_blocks";
  int total = 0;
  Rational constant(1), prod(1);
  bool anchors_inside = true, degenerate = false;
  for (const auto& b : blocks) {
    total += b.body.dim();
    constant *= constant_table::factorial_q(b.body.dim());
    prod *= b.body.volume();
    anchors_inside = anchors_inside && b.body.contains(b.anchor);
    degenerate = degenerate || !b.body.full_dimensional();
  }
  constant /= constant_table::factorial_q(total);
  r.constant = constant;
  RationalPolytope c = conv_of_blocks(blocks);
  r.lhs = Value::exact(c.volume());
  r.rhs = Value::exact(constant * prod);
  finalize(r);
  const bool predicted_equality = anchors_inside || degenerate;
  r.equality_predicted = predicted_equality;
  if (!degenerate && r.equality != predicted_equality) {
    // On nondegenerate blocks the characterization is exact; a mismatch is a
    // hard failure.
    r.holds = false;
    r.notes.push_back("equality characterization mismatch");
  } else if (degenerate && !r.equality) {
    // A zero-volume block zeroes the bound while the hull can keep positive
    // volume, so the stated equality flag is nominal there.
    r.notes.push_back("degenerate block: bound is zero, hull volume may be positive");
  }
  return r;
}

InequalityReport check_min_prod(const std::vector<LogConcaveFn>& fns) {
  if (fns.size() < 2) throw InequalityError("min_prod: need at least two functions");
  for (const auto& f : fns) {
    Value sup = f.sup_norm();
    bool over = sup.is_exact() ? sup.rational() > Rational(1) : sup.to_double() > 1.0 + 1e-12;
    if (over) throw HeightExceedsOne("min_prod: a factor exceeds height 1");
  }
  InequalityReport r;
  r.id = "lemma3.1.min_prod";
  r.constant = Rational(1);

  bool all_ind = true;
  for (const auto& f : fns) all_ind = all_ind && f.is_indicator();
  if (all_ind) {
    Rational minh = fns[0].as_indicator().height;
    Rational volprod(1), rhs(1);
    for (const auto& f : fns) {
      const auto& ind = f.as_indicator();
      if (ind.height < minh) minh = ind.height;
      volprod *= ind.body.volume();
      rhs *= ind.height * ind.body.volume();
    }
    r.lhs = Value::exact(minh * volprod);
    r.rhs = Value::exact(rhs);
  } else {
    // Layer cake: integral of prod_j vol({f_j >= t}) over t up to min height,
    // split at the indicator heights where the integrand jumps.
    double minh = 1.0;
    std::vector<double> cuts{0.0};
    for (const auto& f : fns) {
      double h = f.sup_norm().to_double();
      minh = std::min(minh, h);
      cuts.push_back(h);
    }
    cuts.push_back(minh);
    std::sort(cuts.begin(), cuts.end());
    auto integrand = [&](double t) {
      if (t <= 0) t = 1e-300;
      double prod = 1.0;
      for (const auto& f : fns) prod *= superlevel_volume(f, t);
      return prod;
    };
    double lhs = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
      double a = cuts[i], b = std::min(cuts[i + 1], minh);
      if (b > a + 1e-15) lhs += adaptive_simpson(integrand, a, b, 1e-10);
    }
    Value rhs = Value::exact(Rational(1));
    for (const auto& f : fns) rhs = rhs * integrate(f);
    r.lhs = Value::approx(lhs);
    r.rhs = Value::approx(rhs.to_double());
  }
  finalize(r);
  if (!r.exact) r.tolerance = 1e-4;  // layer-cake quadrature accuracy
  r.holds = Value::at_least(r.lhs, r.rhs, r.tolerance);
  return r;
}

InequalityReport check_cap_subspace(const std::vector<Block>& blocks, const IndexSet& sigma) {
  InequalityReport r;
  r.id = "lemma3.2.cap_subspace";
  r.constant = Rational(1);
  std::vector<int> offsets{0};
  for (const auto& b : blocks) {
    if (!b.body.full_dimensional())
      throw InequalityError("cap_subspace: blocks must be full-dimensional");
    for (Eigen::Index i = 0; i < b.anchor.size(); ++i)
      if (!b.anchor(i).is_zero())
        throw InequalityError("cap_subspace: anchors must be zero");
    offsets.push_back(offsets.back() + b.body.dim());
  }
  const int total = offsets.back();
  if (sigma.ground() != total) throw InequalityError("cap_subspace: sigma ground set mismatch");

  RationalPolytope c = conv_of_blocks(blocks);
  std::vector<VecQ> left_vertices;
  if (sigma == IndexSet::full(total)) {
    left_vertices = c.vertices();
  } else {
    IndexSet fixed = sigma.complement();
    RationalPolytope sec = section(c, CoordinateFlat{fixed, vecq_zero(fixed.size())});
    left_vertices = sec.vertices();
  }

  // Right side: blockwise intersections K_j cap H_sigma, embedded into the
  // sigma coordinates.  A block whose axes all miss sigma reduces to
  // K_j cap {0}, contributing the origin only when the block contains 0.
  auto sig_axes = sigma.axes();
  const int sdim = static_cast<int>(sig_axes.size());
  std::vector<VecQ> right_points;
  for (size_t j = 0; j < blocks.size(); ++j) {
    const int d = blocks[j].body.dim();
    std::vector<int> local;  // block-local axes kept by sigma
    for (int i = 0; i < d; ++i)
      if (sigma.contains(offsets[j] + i)) local.push_back(i);
    if (local.empty()) {
      if (blocks[j].body.contains(vecq_zero(d))) right_points.push_back(vecq_zero(sdim));
      continue;
    }
    IndexSet keep = IndexSet::of(d, local);
    RationalPolytope piece;
    if (keep == IndexSet::full(d)) {
      piece = blocks[j].body;
    } else {
      IndexSet fixed = keep.complement();
      piece = section(blocks[j].body, CoordinateFlat{fixed, vecq_zero(fixed.size())});
    }
    if (piece.is_empty()) continue;
    // Embed piece vertices at this block's sigma positions.
    for (const auto& v : piece.vertices()) {
      VecQ point = vecq_zero(sdim);
      int c2 = 0;
      for (int i = 0; i < d; ++i) {
        if (!sigma.contains(offsets[j] + i)) continue;
        int global_axis = offsets[j] + i;
        int spos = static_cast<int>(std::lower_bound(sig_axes.begin(), sig_axes.end(),
                                                     global_axis) -
                                    sig_axes.begin());
        point(spos) = v(c2++);
      }
      right_points.push_back(std::move(point));
    }
  }

  std::sort(left_vertices.begin(), left_vertices.end(), lex_less);
  bool equal;
  if (right_points.empty()) {
    equal = left_vertices.empty();
  } else {
    RationalPolytope right = hull(right_points);
    equal = left_vertices.size() == right.vertices().size();
    if (equal)
      for (size_t i = 0; i < left_vertices.size(); ++i)
        equal = equal && vec_eq(left_vertices[i], right.vertices()[i]);
  }

  r.lhs = Value::exact(Rational(equal ? 1 : 0));
  r.rhs = Value::exact(Rational(1));
  finalize(r);
  r.equality = equal;
  r.holds = equal;
  if (!equal) r.notes.push_back("vertex sets differ");
  return r;
}

InequalityReport check_operator_lower_bound(const std::vector<LogConcaveFn>& fns,
                                            int mc_samples, uint64_t seed) {
  if (fns.size() < 2) throw InequalityError("operator_lower_bound: need at least two factors");
  InequalityReport r;
  r.id = "lemma2.3.operator_lower_bound";
  int total = 0;
  Rational constant(1);
  for (const auto& f : fns) {
    total += f.dim();
    constant *= constant_table::factorial_q(f.dim());
  }
  constant /= constant_table::factorial_q(total);
  r.constant = constant;

  auto embedded = embed_factors(fns);
  EmbeddedIntegral integral = supconv_embedded_integral(embedded, mc_samples, seed);
  Value maxsup = fns[0].sup_norm();
  for (const auto& f : fns) {
    Value s = f.sup_norm();
    bool bigger = maxsup.is_exact() && s.is_exact() ? s.rational() > maxsup.rational()
                                                    : s.to_double() > maxsup.to_double();
    if (bigger) maxsup = s;
  }
  r.lhs = maxsup.pow(static_cast<long>(fns.size()) - 1) * integral.value;
  Value prod = Value::exact(constant);
  for (const auto& f : fns) prod = prod * integrate(f);
  r.rhs = prod;
  finalize(r);
  if (!r.exact) {
    // Monte Carlo error dominates the tolerance on the numeric path.
    double scale = std::max(std::abs(r.lhs.to_double()), 1e-12);
    r.tolerance = std::max(kNumericTolerance, 4.0 * integral.stderr_ / scale + 1e-3);
    r.holds = Value::at_least(r.lhs, r.rhs, r.tolerance);
    r.notes.push_back("integral via Monte Carlo, stderr " + std::to_string(integral.stderr_));
  }
  return r;
}

ConstantComparison constant_ratio_prop41(int n, int p) {
  if (p < 2 || 4 * p > n) throw OutOfRange("prop41: requires 2 <= p <= n/4");
  ConstantComparison c;
  c.n = n;
  c.p = p;
  // ratio = (p!/n^p) / ((p-1)!^{p-1} / (n(p-1))!).  Specializing the mixed
  // section form to sigma_i = sigma minus {i} would give (p-1)!^p in the
  // denominator instead; that variant is reported alongside, not compared.
  c.ratio = constant_table::factorial_q(p) * constant_table::factorial_q(n * (p - 1)) /
            (Rational(n).pow(p) * constant_table::factorial_q(p - 1).pow(p - 1));

  // bound = n^{n(p-2)/4} (p-1)^{(n-4p)(p-1)/2} (p-1)^{(p-1)(p+2)}; compare
  // 4th powers so all exponents are integers.
  long e1 = static_cast<long>(n) * (p - 2);                 // *4/4
  long e2 = 2L * (n - 4 * p) * (p - 1);                     // *4/2
  long e3 = 4L * (p - 1) * (p + 2);
  Rational bound4 = Rational(n).pow(e1) * Rational(p - 1).pow(e2) * Rational(p - 1).pow(e3);
  Rational ratio4 = c.ratio.pow(4);
  c.holds = ratio4 >= bound4;
  c.bound = std::exp((e1 * std::log(n) + (e2 + e3) * std::log(std::max(p - 1, 1))) / 4.0);
  Rational variant = c.ratio / constant_table::factorial_q(p - 1);
  c.note = "compared at 4th powers; variant with (p-1)!^p denominator = " + variant.frac_str();
  return c;
}

ConstantComparison constant_ratio_prop42(int n) {
  if (n < 5) throw OutOfRange("prop42: requires n >= 5");
  ConstantComparison c;
  c.n = n;
  c.p = n - 1;
  // ratio = ((n-1)!/n^{n-1}) / ((n-2)!^{n-2} / (n(n-2))!)
  c.ratio = constant_table::factorial_q(n - 1) * constant_table::factorial_q(n * (n - 2)) /
            (Rational(n).pow(n - 1) * constant_table::factorial_q(n - 2).pow(n - 2));

  // bound = 2^{n-5} (n-2)^{n-4} (n(n-2))^{n(n-2)/16}; compare 16th powers.
  long e1 = 16L * (n - 5);
  long e2 = 16L * (n - 4);
  long e3 = static_cast<long>(n) * (n - 2);
  Rational bound16 = Rational(2).pow(e1) * Rational(n - 2).pow(e2) *
                     Rational(static_cast<long>(n) * (n - 2)).pow(e3);
  Rational ratio16 = c.ratio.pow(16);
  c.holds = ratio16 >= bound16;
  c.bound = std::exp((e1 * std::log(2.0) + e2 * std::log(n - 2.0) +
                      e3 * std::log(static_cast<double>(n) * (n - 2))) / 16.0);
  c.note = "compared at 16th powers";
  return c;
}

Rational prop42_special_n4() {
  // (3!/4^3) / (2!^2/8!)
  return constant_table::factorial_q(3) / Rational(4).pow(3) /
         (constant_table::factorial_q(2).pow(2) / constant_table::factorial_q(8));
}

}  // namespace coverineq
