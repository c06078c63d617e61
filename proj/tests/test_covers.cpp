#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coverineq/covers.hpp"

using namespace coverineq;

namespace {
IndexSet iset(int n, std::initializer_list<int> one_based) {
  std::vector<int> axes;
  for (int v : one_based) axes.push_back(v - 1);
  return IndexSet::of(n, axes);
}
}  // namespace

TEST_CASE("validate_cover recognizes the classical patterns") {
  // Loomis-Whitney: sigma_i = [n] \ {i} is an (n-1)-cover.
  auto lw = validate_cover({iset(3, {2, 3}), iset(3, {1, 3}), iset(3, {1, 2})}, iset(3, {1, 2, 3}));
  CHECK(lw.multiplicity == 2);

  auto single = validate_cover({iset(3, {1, 2, 3})}, iset(3, {1, 2, 3}));
  CHECK(single.multiplicity == 1);

  auto overlap = validate_cover({iset(2, {1}), iset(2, {2}), iset(2, {1, 2})}, iset(2, {1, 2}));
  CHECK(overlap.multiplicity == 2);
}

TEST_CASE("validate_cover rejects malformed families") {
  CHECK_THROWS_AS(validate_cover({iset(3, {1}), iset(3, {1, 2})}, iset(3, {1, 2, 3})),
                  NonUniformMultiplicity);
  CHECK_THROWS_AS(validate_cover({iset(3, {1, 2, 3}), IndexSet::empty(3)}, iset(3, {1, 2, 3})),
                  EmptyMember);
  CHECK_THROWS_AS(validate_cover({iset(3, {1, 2, 3})}, iset(3, {1, 2})), NotSubset);
  CHECK_THROWS_AS(validate_cover({}, iset(3, {1})), CoverError);
}

TEST_CASE("complement_cover flips members elementwise") {
  auto lw = validate_cover({iset(3, {2, 3}), iset(3, {1, 3}), iset(3, {1, 2})}, iset(3, {1, 2, 3}));
  auto comp = complement_cover(lw);
  CHECK(comp.multiplicity == 1);
  CHECK(comp.members[0] == iset(3, {1}));
  CHECK(comp.members[1] == iset(3, {2}));
  CHECK(comp.members[2] == iset(3, {3}));

  auto swap2 = validate_cover({iset(2, {1}), iset(2, {2})}, iset(2, {1, 2}));
  auto swapped = complement_cover(swap2);
  CHECK(swapped.members[0] == iset(2, {2}));
  CHECK(swapped.members[1] == iset(2, {1}));

  auto full = validate_cover({iset(3, {1, 2, 3})}, iset(3, {1, 2, 3}));
  CHECK_THROWS_AS(complement_cover(full), MemberEqualsBase);
}

TEST_CASE("induced_one_cover groups by membership signature") {
  auto c1 = validate_cover({iset(3, {1, 2}), iset(3, {2, 3}), iset(3, {1, 3})}, iset(3, {1, 2, 3}));
  auto blocks = induced_one_cover(c1);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == iset(3, {1}));
  CHECK(blocks[1] == iset(3, {2}));
  CHECK(blocks[2] == iset(3, {3}));

  auto c2 = validate_cover({iset(2, {1, 2})}, iset(2, {1, 2}));
  auto blocks2 = induced_one_cover(c2);
  REQUIRE(blocks2.size() == 1);
  CHECK(blocks2[0] == iset(2, {1, 2}));

  auto c3 = validate_cover(
      {iset(4, {1, 2}), iset(4, {3, 4}), iset(4, {1, 2}), iset(4, {3, 4})}, iset(4, {1, 2, 3, 4}));
  auto blocks3 = induced_one_cover(c3);
  REQUIRE(blocks3.size() == 2);
  CHECK(blocks3[0] == iset(4, {1, 2}));
  CHECK(blocks3[1] == iset(4, {3, 4}));
}

TEST_CASE("is_one_reducible finds decompositions and rejects odd-size splits") {
  auto c = validate_cover({iset(2, {1}), iset(2, {2}), iset(2, {1, 2})}, iset(2, {1, 2}));
  auto d = is_one_reducible(c);
  REQUIRE(d.has_value());
  REQUIRE(d->groups.size() == 2);
  // The only size-consistent split: {m0, m1} and {m2}.
  for (const auto& g : d->groups) {
    uint64_t covered = 0;
    for (int idx : g) covered |= c.members[idx].bits();
    CHECK(covered == c.base.bits());
  }

  // Member sizes in each group must sum to |base| = 3; all members have size
  // 2, so no decomposition exists.
  auto tri = validate_cover({iset(3, {1, 2}), iset(3, {2, 3}), iset(3, {1, 3})},
                            iset(3, {1, 2, 3}));
  CHECK_FALSE(is_one_reducible(tri).has_value());

  auto one = validate_cover({iset(3, {1}), iset(3, {2, 3})}, iset(3, {1, 2, 3}));
  auto d1 = is_one_reducible(one);
  REQUIRE(d1.has_value());
  CHECK(d1->groups.size() == 1);
  CHECK(d1->groups[0].size() == 2);
}

TEST_CASE("is_one_reducible groups revalidate as 1-covers") {
  Rng rng(99);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = rng.next_int(2, 5);
    IndexSet base = IndexSet::full(n);
    int m = rng.next_int(2, 5);
    int s = rng.next_int(1, std::max(1, m - 1));
    CoverFamily c;
    try {
      c = random_cover(base, m, s, rng);
    } catch (const GenerationFailed&) {
      continue;
    }
    auto d = is_one_reducible(c);
    if (!d) continue;
    ++found;
    REQUIRE(static_cast<int>(d->groups.size()) == c.multiplicity);
    std::vector<char> used(c.member_count(), 0);
    for (const auto& g : d->groups) {
      std::vector<IndexSet> members;
      for (int idx : g) {
        CHECK(!used[idx]);
        used[idx] = 1;
        members.push_back(c.members[idx]);
      }
      auto sub = validate_cover(members, c.base);
      CHECK(sub.multiplicity == 1);
    }
  }
  CHECK(found > 0);
}

TEST_CASE("random_cover output validates with the requested multiplicity") {
  auto c = random_cover(3, iset(3, {1, 2, 3}), 3, 2, 7);
  CHECK(c.multiplicity == 2);
  CHECK(c.member_count() == 3);

  auto c2 = random_cover(2, iset(2, {1, 2}), 2, 1, 11);
  CHECK(c2.multiplicity == 1);

  auto c3 = random_cover(2, iset(2, {1, 2}), 1, 1, 3);
  CHECK(c3.member_count() == 1);
  CHECK(c3.members[0] == iset(2, {1, 2}));

  // Determinism under seed.
  auto a = random_cover(4, iset(4, {1, 2, 4}), 3, 2, 1234);
  auto b = random_cover(4, iset(4, {1, 2, 4}), 3, 2, 1234);
  REQUIRE(a.member_count() == b.member_count());
  for (int i = 0; i < a.member_count(); ++i) CHECK(a.members[i] == b.members[i]);
}

TEST_CASE("random_cover reports infeasible shapes") {
  // One base element cannot hit only s=1 of m=3 members without leaving
  // some member empty.
  CHECK_THROWS_AS(random_cover(3, iset(3, {1}), 3, 1, 5), GenerationFailed);
}

TEST_CASE("cover invariants on random families") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = rng.next_int(2, 6);
    uint64_t bits = 1 + rng.next_below((uint64_t{1} << n) - 1);
    IndexSet sigma(n, bits);
    int m = rng.next_int(1, 5);
    int s = rng.next_int(1, m);
    CoverFamily c;
    try {
      c = random_cover(sigma, m, s, rng);
    } catch (const GenerationFailed&) {
      continue;
    }

    // Size identity.
    int total = 0;
    for (const auto& mem : c.members) total += mem.size();
    CHECK(total == c.multiplicity * c.base.size());

    // Complement involution where defined.
    bool any_full = false;
    for (const auto& mem : c.members) any_full = any_full || mem == c.base;
    if (!any_full && s < m) {
      auto comp = complement_cover(c);
      auto back = complement_cover(comp);
      REQUIRE(back.member_count() == c.member_count());
      for (int i = 0; i < c.member_count(); ++i) CHECK(back.members[i] == c.members[i]);
    }

    // Induced blocks partition the base and respect every member.
    auto blocks = induced_one_cover(c);
    uint64_t unions = 0;
    for (const auto& b : blocks) {
      CHECK((unions & b.bits()) == 0);
      unions |= b.bits();
      for (const auto& mem : c.members) {
        bool inside = b.subset_of(mem);
        bool disjoint = b.intersect(mem).empty_set();
        CHECK((inside || disjoint));
      }
    }
    CHECK(unions == c.base.bits());
  }
}
