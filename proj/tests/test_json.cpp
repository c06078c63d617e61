#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverineq/harness.hpp"
#include "coverineq/json_io.hpp"

using namespace coverineq;

TEST_CASE("rational parsing accepts fractions, integers, and decimals") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK(Rational::parse("1.5") == Rational(3, 2));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK(Rational(9, 2).frac_str() == "9/2");
  CHECK(Rational(-3).str() == "-3");
}

TEST_CASE("cover wire format is 1-based") {
  json j = json::parse(R"({"n": 4, "base": [1,2,3], "members": [[1,2],[2,3],[1,3]]})");
  CoverFamily c = cover_from_json(j);
  CHECK(c.multiplicity == 2);
  CHECK(c.base == IndexSet::of(4, {0, 1, 2}));
  json back = cover_to_json(c);
  CHECK(back["base"] == json::parse("[1,2,3]"));
  CHECK(back["members"][0] == json::parse("[1,2]"));
  CHECK(cover_from_json(back).members[1] == c.members[1]);
}

TEST_CASE("polytope JSON round-trips bit-exactly") {
  json j = json::parse(R"({"dim": 2, "vertices": [["-1","0"], ["0","-1"], ["1","0"], ["0","1"]]})");
  RationalPolytope p = polytope_from_json(j);
  CHECK(p.volume() == Rational(2));
  json back = polytope_to_json(p);
  RationalPolytope q = polytope_from_json(back);
  REQUIRE(p.vertices().size() == q.vertices().size());
  for (size_t i = 0; i < p.vertices().size(); ++i) CHECK(vec_eq(p.vertices()[i], q.vertices()[i]));
  CHECK(polytope_to_json(q).dump() == back.dump());

  // Fractional and decimal coordinates land on the same exact values.
  json frac = json::parse(R"({"dim": 1, "vertices": [["-1/4"], ["0.75"]]})");
  RationalPolytope seg = polytope_from_json(frac);
  CHECK(seg.vertices()[0](0) == Rational(-1, 4));
  CHECK(seg.vertices()[1](0) == Rational(3, 4));
}

TEST_CASE("random polytope JSON round-trip is the identity on vertices") {
  Rng rng(8);
  for (int i = 0; i < 6; ++i) {
    RationalPolytope p = random_polytope(3, i % 2 ? BodyKind::general : BodyKind::unconditional, rng);
    RationalPolytope q = polytope_from_json(polytope_to_json(p));
    REQUIRE(p.vertices().size() == q.vertices().size());
    for (size_t v = 0; v < p.vertices().size(); ++v) CHECK(vec_eq(p.vertices()[v], q.vertices()[v]));
  }
}

TEST_CASE("log-concave function specs round-trip") {
  json ji = json::parse(
      R"({"family":"indicator","body":{"dim":1,"vertices":[["0"],["1"]]},"height":"1"})");
  LogConcaveFn ind = logconcave_from_json(ji);
  CHECK(ind.is_indicator());
  CHECK(integrate(ind).rational() == Rational(1));
  LogConcaveFn ind2 = logconcave_from_json(logconcave_to_json(ind));
  CHECK(integrate(ind2).rational() == Rational(1));

  json jg = json::parse(R"({"family":"gaussian","center":[0.0,0.0],"invcov":[1.0,1.0],"height":1.0})");
  LogConcaveFn g = logconcave_from_json(jg);
  CHECK(g.is_gaussian());
  LogConcaveFn g2 = logconcave_from_json(logconcave_to_json(g));
  CHECK(integrate(g2).to_double() == doctest::Approx(integrate(g).to_double()));

  CHECK_THROWS(logconcave_from_json(json::parse(R"({"family":"mystery"})")));
}

TEST_CASE("reports serialize exact values as fraction strings") {
  RationalPolytope cube = hanner(3, IndexSet::empty(3));
  auto r = check_unconditional_improved(cube, IndexSet::of(3, {0, 1}));
  json j = report_to_json(r);
  CHECK(j["exact"] == true);
  CHECK(j["lhs"] == "16/1");
  CHECK(j["rhs"] == "32/9");
  CHECK(j["ratio"] == "9/2");
  CHECK(j["constant"] == "2/9");
  CHECK(j["holds"] == true);
}
