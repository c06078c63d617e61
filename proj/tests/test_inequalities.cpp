#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "coverineq/constants.hpp"
#include "coverineq/inequalities.hpp"

using namespace coverineq;

namespace {

VecQ pt(std::initializer_list<long> xs) {
  VecQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

IndexSet iset(int n, std::initializer_list<int> one_based) {
  std::vector<int> axes;
  for (int v : one_based) axes.push_back(v - 1);
  return IndexSet::of(n, axes);
}

CoverFamily cover(int n, std::initializer_list<std::initializer_list<int>> members,
                  std::initializer_list<int> base) {
  std::vector<IndexSet> ms;
  for (auto m : members) ms.push_back(iset(n, m));
  return validate_cover(ms, iset(n, base));
}

RationalPolytope cube3() { return hanner(3, IndexSet::empty(3)); }     // [-1,1]^3
RationalPolytope cross3() { return hanner(3, IndexSet::full(3)); }     // B_1^3
RationalPolytope simplex3() {
  return hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
}

}  // namespace

TEST_CASE("projection inequality on the full index set") {
  auto lw = cover(3, {{2, 3}, {1, 3}, {1, 2}}, {1, 2, 3});

  auto r1 = check_bollobas_thomason(cube3(), lw);
  CHECK(r1.exact);
  CHECK(r1.equality);  // the cube is tight
  CHECK(r1.ratio.rational() == Rational(1));

  auto r2 = check_bollobas_thomason(cross3(), lw);
  CHECK(r2.lhs.rational() == Rational(8));
  CHECK(r2.rhs.rational() == Rational(16, 9));
  CHECK(r2.ratio.rational() == Rational(9, 2));

  auto r3 = check_bollobas_thomason(simplex3(), lw);
  CHECK(r3.exact);
  CHECK(r3.holds);
}

TEST_CASE("local projection inequality with binomial constant") {
  auto c = cover(3, {{1}, {2}}, {1, 2});
  auto r = check_local_bt(cube3(), c);
  CHECK(r.constant == Rational(4, 3));
  CHECK(r.exact);
  CHECK(r.holds);
  CHECK(r.lhs.rational() == Rational(4, 3) * Rational(16));
  CHECK(r.rhs.rational() == Rational(16));

  // The constant degenerates to 1 when every member equals the base.
  Rational c_one = constant_table::binomial_q(3 - 2, 3 - 2).pow(2) /
                   constant_table::binomial_q(3, 3 - 2).pow(0);
  CHECK(c_one == Rational(1));

  auto full_base = cover(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3});
  CHECK_THROWS_AS(check_local_bt(cube3(), full_base), InvalidCover);
}

TEST_CASE("section inequality through the origin") {
  auto c = cover(3, {{1}, {2, 3}}, {1, 2, 3});
  auto r = check_liakopoulos(cross3(), c);
  CHECK(r.exact);
  CHECK(r.lhs.rational() == Rational(4, 3));
  CHECK(r.rhs.rational() == Rational(4, 3));
  CHECK(r.equality);

  auto r2 = check_liakopoulos(cube3(), c);
  CHECK(r2.lhs.rational() == Rational(8));
  CHECK(r2.rhs.rational() == Rational(8, 3));
  CHECK(r2.ratio.rational() == Rational(3));

  auto r3 = check_liakopoulos(simplex3(), cover(3, {{1}, {2}, {3}}, {1, 2, 3}));
  CHECK(r3.exact);
  CHECK(r3.holds);

  RationalPolytope shifted = translate(cube3(), pt({5, 5, 5}));
  CHECK_THROWS_AS(check_liakopoulos(shifted, c), OriginOutside);
}

TEST_CASE("local section inequality (both exponent orientations)") {
  auto c = cover(3, {{1}, {2}}, {1, 2});
  auto r = check_local_meyer_abbc(cross3(), c);
  CHECK(r.holds);
  CHECK(r.exact);  // cross-polytope is symmetric: exact anchor 0

  auto u = check_local_meyer_abbc(cube3(), c);
  CHECK(u.exact);
  CHECK(u.holds);

  auto swapped = check_local_meyer_abbc(cube3(), c, true);
  CHECK(swapped.id == "eq4.local_meyer_abbc.swapped");

  auto full = cover(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3});
  CHECK_THROWS_AS(check_local_meyer_abbc(cube3(), full), InvalidCover);
}

TEST_CASE("two-member 1-cover section inequality") {
  auto c = cover(3, {{1}, {2}}, {1, 2});

  auto hr = check_aagjv_s1(hanner(3, iset(3, {1, 2})), c);
  CHECK(hr.exact);
  CHECK(hr.equality);  // equality witness

  auto cr = check_aagjv_s1(cube3(), c);
  CHECK(cr.lhs.rational() == Rational(16));
  CHECK(cr.rhs.rational() == Rational(8));
  CHECK(cr.ratio.rational() == Rational(2));

  auto br = check_aagjv_s1(cross3(), c);
  CHECK(br.exact);
  CHECK(br.holds);

  CHECK_THROWS_AS(check_aagjv_s1(cube3(), cover(3, {{1}, {2}, {1, 2}}, {1, 2})), InvalidCover);
}

TEST_CASE("sharp local inequality: hanner equality and reducibility gate") {
  auto c = cover(3, {{1}, {2}}, {1, 2});
  auto hr = check_thm_sharp_local(hanner(3, iset(3, {1, 2})), c);
  CHECK(hr.exact);
  CHECK(hr.equality);
  REQUIRE(hr.induced.size() == 2);

  auto cr = check_thm_sharp_local(cube3(), c);
  CHECK(cr.exact);
  CHECK(cr.holds);

  // Complement of ({3},{1},{2}) over sigma={1,2,3} in n=4 is the 2-cover
  // ({1,2},{2,3},{1,3}), which is not 1-reducible.
  auto bad = cover(4, {{3}, {1}, {2}}, {1, 2, 3});
  RationalPolytope cube4 = hanner(4, IndexSet::empty(4));
  CHECK_THROWS_AS(check_thm_sharp_local(cube4, bad), NotReducible);
}

TEST_CASE("functional inequality on indicators and gaussians") {
  auto c = cover(2, {{1}, {2}}, {1, 2});
  LogConcaveFn sq = LogConcaveFn::indicator(hanner(2, IndexSet::empty(2)), Rational(1));
  auto r = check_functional_rs(sq, c);
  CHECK(r.exact);
  CHECK(r.lhs.rational() == Rational(4));
  CHECK(r.rhs.rational() == Rational(2));
  CHECK(r.ratio.rational() == Rational(2));

  LogConcaveFn g = LogConcaveFn::gaussian(VecD::Zero(2), VecD::Ones(2), 1.0);
  auto rg = check_functional_rs(g, c);
  CHECK(rg.lhs.to_double() == doctest::Approx(M_PI).epsilon(1e-3));
  CHECK(rg.rhs.to_double() == doctest::Approx(M_PI / 2).epsilon(1e-3));
  CHECK(rg.ratio.to_double() == doctest::Approx(2.0).epsilon(1e-3));

  // Block-hull indicator matched to the induced 1-cover: equality case.
  VecQ lo(1), hi(1);
  lo(0) = Rational(-1);
  hi(0) = Rational(2);
  RationalPolytope seg = hull({lo, hi});
  RationalPolytope blockhull = conv_of_blocks({{seg, pt({0})}, {seg, pt({0})}});
  LogConcaveFn chi = LogConcaveFn::indicator(blockhull, Rational(1));
  auto re = check_functional_rs(chi, c);
  CHECK(re.exact);
  CHECK(re.equality);

  auto not_reducible = cover(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3});
  LogConcaveFn c3 = LogConcaveFn::indicator(cube3(), Rational(1));
  CHECK_THROWS_AS(check_functional_rs(c3, not_reducible), NotReducible);
}

TEST_CASE("marginal corollary specializes to the geometric inequality") {
  auto c = cover(3, {{1}, {2}}, {1, 2});

  RationalPolytope k = hanner(3, iset(3, {1, 2}));
  LogConcaveFn chi = LogConcaveFn::indicator(k, Rational(1));
  auto functional = check_cor_marginals(chi, c);
  auto geometric = check_thm_sharp_local(k, c);
  CHECK(functional.exact);
  CHECK(functional.lhs.rational() == geometric.lhs.rational());
  CHECK(functional.rhs.rational() == geometric.rhs.rational());
  CHECK(functional.equality);

  LogConcaveFn g = LogConcaveFn::gaussian(VecD::Zero(3), VecD::Ones(3), 1.0);
  auto rg = check_cor_marginals(g, c);
  CHECK(rg.ratio.to_double() >= 1.0 - 1e-3);
}

TEST_CASE("original mixed-section form") {
  auto c = cover(3, {{1}, {2}}, {1, 2});
  auto r = check_abbc_original(cube3(), c);
  CHECK(r.exact);
  CHECK(r.lhs.rational() == Rational(16));
  CHECK(r.rhs.rational() == Rational(8, 3));
  CHECK(r.ratio.rational() == Rational(6));

  auto br = check_abbc_original(cross3(), c);
  CHECK(br.holds);

  auto full = cover(3, {{1, 2}, {2, 3}, {1, 3}}, {1, 2, 3});
  CHECK_THROWS_AS(check_abbc_original(cube3(), full), InvalidCover);
}

TEST_CASE("unconditional improvement") {
  auto r = check_unconditional_improved(cube3(), iset(3, {1, 2}));
  CHECK(r.exact);
  CHECK(r.lhs.rational() == Rational(16));
  CHECK(r.rhs.rational() == Rational(32, 9));
  CHECK(r.ratio.rational() == Rational(9, 2));

  auto br = check_unconditional_improved(cross3(), iset(3, {1, 2}));
  CHECK(br.lhs.rational() == Rational(8, 3));
  CHECK(br.rhs.rational() == Rational(8, 9));
  CHECK(br.ratio.rational() == Rational(3));

  auto hr = check_unconditional_improved(hanner(3, iset(3, {1, 2})), iset(3, {1, 2}));
  CHECK(hr.exact);
  CHECK(hr.holds);

  CHECK_THROWS_AS(check_unconditional_improved(simplex3(), iset(3, {1})), NotUnconditional);
}

TEST_CASE("block hull volume bound and its equality characterization") {
  VecQ a(1), b(1);
  a(0) = Rational(0);
  b(0) = Rational(1);
  RationalPolytope seg01 = hull({a, b});
  std::vector<VecQ> sq_pts{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  RationalPolytope sq01 = hull(sq_pts);

  auto eq = check_lemma_conv_blocks({{seg01, pt({0})}, {sq01, pt({0, 0})}});
  CHECK(eq.exact);
  CHECK(eq.equality);
  CHECK(eq.lhs.rational() == Rational(1, 3));
  REQUIRE(eq.equality_predicted.has_value());
  CHECK(*eq.equality_predicted);

  VecQ two(1);
  two(0) = Rational(2);
  auto strict = check_lemma_conv_blocks({{seg01, two}, {seg01, pt({0})}});
  CHECK(strict.exact);
  CHECK(strict.holds);
  CHECK_FALSE(strict.equality);
  CHECK_FALSE(*strict.equality_predicted);

  // A zero-volume block zeroes the bound; the characterization flags it.
  RationalPolytope point = hull({pt({3})});
  auto degen = check_lemma_conv_blocks({{point, pt({0})}, {seg01, pt({0})}});
  CHECK(degen.rhs.rational() == Rational(0));
  CHECK(*degen.equality_predicted);
  CHECK(degen.holds);
}

TEST_CASE("min-product inequality") {
  VecQ a(1), b(1);
  a(0) = Rational(0);
  b(0) = Rational(1);
  RationalPolytope seg01 = hull({a, b});
  LogConcaveFn ind = LogConcaveFn::indicator(seg01, Rational(1));
  auto r = check_min_prod({ind, ind});
  CHECK(r.exact);
  CHECK(r.equality);
  CHECK(r.lhs.rational() == Rational(1));

  RationalPolytope supp = hull({a, vecq({Rational(60)})});
  LogConcaveFn decay = LogConcaveFn::exp_concave_pl(supp, {AffinePiece{pt({-1}), Rational(0)}});
  auto r2 = check_min_prod({ind, decay});
  CHECK(r2.lhs.to_double() == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r2.rhs.to_double() == doctest::Approx(1.0).epsilon(1e-4));

  auto r3 = check_min_prod({decay, decay});
  CHECK(r3.lhs.to_double() == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(r3.rhs.to_double() == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(r3.holds);

  LogConcaveFn tall = LogConcaveFn::indicator(seg01, Rational(2));
  CHECK_THROWS_AS(check_min_prod({ind, tall}), HeightExceedsOne);
}

TEST_CASE("section of a block hull equals the block hull of sections") {
  std::vector<VecQ> sq_pts{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  RationalPolytope sq01 = hull(sq_pts);
  VecQ a(1), b(1);
  a(0) = Rational(0);
  b(0) = Rational(1);
  RationalPolytope seg01 = hull({a, b});

  std::vector<Block> blocks{{sq01, pt({0, 0})}, {seg01, pt({0})}};
  auto r = check_cap_subspace(blocks, iset(3, {1, 3}));
  CHECK(r.equality);
  CHECK(r.holds);

  auto rfull = check_cap_subspace(blocks, iset(3, {1, 2, 3}));
  CHECK(rfull.equality);

  // sigma missing block 2 entirely: it contributes only the origin.
  auto rpart = check_cap_subspace(blocks, iset(3, {1, 2}));
  CHECK(rpart.equality);
}

TEST_CASE("operator lower bound on embedded factors") {
  VecQ a(1), b(1);
  a(0) = Rational(0);
  b(0) = Rational(1);
  RationalPolytope seg01 = hull({a, b});
  std::vector<VecQ> sq_pts{pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  RationalPolytope sq01 = hull(sq_pts);

  LogConcaveFn f1 = LogConcaveFn::indicator(seg01, Rational(1));
  LogConcaveFn f2 = LogConcaveFn::indicator(sq01, Rational(1));
  auto r = check_operator_lower_bound({f1, f2});
  CHECK(r.exact);
  CHECK(r.equality);  // equal heights, 0 in both bodies

  LogConcaveFn half = LogConcaveFn::indicator(seg01, Rational(1, 2));
  auto r2 = check_operator_lower_bound({f1, half}, 200000, 5);
  CHECK_FALSE(r2.exact);
  CHECK(r2.holds);
  CHECK(r2.ratio.to_double() > 1.1);  // strict: unequal heights

  LogConcaveFn g = LogConcaveFn::gaussian(VecD::Zero(1), VecD::Ones(1), 1.0);
  auto r3 = check_operator_lower_bound({g, f1}, 200000, 6);
  CHECK(r3.ratio.to_double() >= 1.0 - 1e-2);
}

TEST_CASE("constant ratio estimates") {
  auto c = constant_ratio_prop41(8, 2);
  CHECK(c.ratio == Rational(1260));
  CHECK(c.holds);

  CHECK(constant_ratio_prop41(12, 3).holds);
  CHECK_THROWS_AS(constant_ratio_prop41(7, 2), OutOfRange);

  CHECK(prop42_special_n4() == Rational(945));
  CHECK(constant_ratio_prop42(5).holds);
  CHECK_THROWS_AS(constant_ratio_prop42(3), OutOfRange);
}

TEST_CASE("scaling covariance: ratios are invariant under diagonal scaling") {
  Rng rng(14);
  auto lw = cover(3, {{2, 3}, {1, 3}, {1, 2}}, {1, 2, 3});
  auto c1 = cover(3, {{1}, {2, 3}}, {1, 2, 3});
  for (int trial = 0; trial < 5; ++trial) {
    RationalPolytope k = random_polytope(3, BodyKind::general, rng);
    VecQ factors(3);
    for (int i = 0; i < 3; ++i) factors(i) = rng.next_rational_unit(4) + Rational(1, 2);
    RationalPolytope scaled = scale_axes(k, factors);

    auto r1 = check_bollobas_thomason(k, lw);
    auto r2 = check_bollobas_thomason(scaled, lw);
    CHECK(r1.ratio.rational() == r2.ratio.rational());

    auto s1 = check_liakopoulos(k, c1);
    auto s2 = check_liakopoulos(scaled, c1);
    CHECK(s1.ratio.rational() == s2.ratio.rational());
  }
}

TEST_CASE("functional and geometric checks agree on indicators") {
  Rng rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    int n = rng.next_int(2, 3);
    RationalPolytope k = random_polytope(n, BodyKind::general, rng);
    // Concatenations of partitions are 1-reducible covers of the full set.
    std::vector<IndexSet> members;
    for (int i = 0; i < n; ++i) members.push_back(IndexSet::of(n, {i}));
    members.push_back(IndexSet::full(n));
    CoverFamily c = validate_cover(members, IndexSet::full(n));

    LogConcaveFn chi = LogConcaveFn::indicator(k, Rational(1));
    auto functional = check_functional_rs(chi, c);
    auto geometric = check_liakopoulos(k, c);
    REQUIRE(functional.exact);
    REQUIRE(geometric.exact);
    CHECK(functional.lhs.rational() == geometric.lhs.rational());
    CHECK(functional.rhs.rational() == geometric.rhs.rational());
  }
}
