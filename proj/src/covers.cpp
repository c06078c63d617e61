#include "coverineq/covers.hpp"

#include <algorithm>
#include <numeric>

namespace coverineq {

EmptyMember::EmptyMember(int i)
    : CoverError("cover member " + std::to_string(i + 1) + " is empty"), member(i) {}
NotSubset::NotSubset(int i)
    : CoverError("cover member " + std::to_string(i + 1) + " is not a subset of the base"), member(i) {}
NonUniformMultiplicity::NonUniformMultiplicity(int j1, int j2, int c1, int c2)
    : CoverError("non-uniform multiplicity: element " + std::to_string(j1 + 1) + " has count " +
                 std::to_string(c1) + " but element " + std::to_string(j2 + 1) + " has count " +
                 std::to_string(c2)),
      axis1(j1), axis2(j2), count1(c1), count2(c2) {}
MemberEqualsBase::MemberEqualsBase(int i)
    : CoverError("cover member " + std::to_string(i + 1) + " equals the base; complement would be empty"),
      member(i) {}

CoverFamily validate_cover(const std::vector<IndexSet>& members, const IndexSet& base) {
  if (members.empty()) throw CoverError("cover has no members");
  if (base.empty_set()) throw CoverError("cover base is empty");
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    if (members[i].empty_set()) throw EmptyMember(i);
    if (!members[i].subset_of(base)) throw NotSubset(i);
  }
  auto axes = base.axes();
  int s = -1, first_axis = -1;
  for (int j : axes) {
    int count = 0;
    for (const auto& m : members) count += m.contains(j) ? 1 : 0;
    if (s < 0) {
      s = count;
      first_axis = j;
    } else if (count != s) {
      throw NonUniformMultiplicity(first_axis, j, s, count);
    }
  }
  if (s == 0) throw CoverError("cover multiplicity is zero");

  // Consequence of the defining property, checked independently.
  int total = 0;
  for (const auto& m : members) total += m.size();
  if (total != s * base.size()) throw CoverError("cover size identity violated");

  return CoverFamily{base, members, s};
}

CoverFamily complement_cover(const CoverFamily& c) {
  std::vector<IndexSet> flipped;
  flipped.reserve(c.members.size());
  for (int i = 0; i < c.member_count(); ++i) {
    IndexSet d = c.base.minus(c.members[i]);
    if (d.empty_set()) throw MemberEqualsBase(i);
    flipped.push_back(d);
  }
  CoverFamily out = validate_cover(flipped, c.base);
  if (out.multiplicity != c.member_count() - c.multiplicity)
    throw CoverError("complement multiplicity mismatch");
  return out;
}

std::vector<IndexSet> induced_one_cover(const CoverFamily& c) {
  // Group base elements by membership signature; identical output to
  // enumerating all 2^m intersections, in O(|base| * m).
  const int n = c.base.ground();
  std::vector<std::pair<uint64_t, uint64_t>> by_sig;  // signature -> block bits
  for (int j : c.base.axes()) {
    uint64_t sig = 0;
    for (int i = 0; i < c.member_count(); ++i)
      if (c.members[i].contains(j)) sig |= uint64_t{1} << i;
    bool found = false;
    for (auto& [s, block] : by_sig)
      if (s == sig) {
        block |= uint64_t{1} << j;
        found = true;
        break;
      }
    if (!found) by_sig.emplace_back(sig, uint64_t{1} << j);
  }
  std::vector<IndexSet> blocks;
  blocks.reserve(by_sig.size());
  for (auto& [sig, bits] : by_sig) blocks.emplace_back(n, bits);
  std::sort(blocks.begin(), blocks.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.smallest() < b.smallest(); });
  return blocks;
}

namespace {

struct ReducibilitySearch {
  const CoverFamily& cover;
  std::vector<int> order;          // member indices, descending size
  std::vector<uint64_t> filled;    // per-bucket coverage bits
  std::vector<int> assignment;     // order position -> bucket
  int s;
  uint64_t base_bits;

  bool assign(size_t pos) {
    if (pos == order.size()) {
      for (uint64_t f : filled)
        if (f != base_bits) return false;
      return true;
    }
    const uint64_t bits = cover.members[order[pos]].bits();
    // First member is pinned to bucket 0 to break bucket symmetry.
    const int limit = pos == 0 ? 1 : s;
    for (int b = 0; b < limit; ++b) {
      if ((filled[b] & bits) != 0) continue;
      filled[b] |= bits;
      assignment[pos] = b;
      if (assign(pos + 1)) return true;
      filled[b] &= ~bits;
    }
    return false;
  }
};

}  // namespace

std::optional<OneCoverDecomposition> is_one_reducible(const CoverFamily& c) {
  const int s = c.multiplicity;
  if (s == 1) {
    // A 1-cover is a partition of the base already.
    OneCoverDecomposition d;
    d.groups.emplace_back(c.member_count());
    std::iota(d.groups[0].begin(), d.groups[0].end(), 0);
    return d;
  }
  ReducibilitySearch search{c, {}, std::vector<uint64_t>(s, 0), std::vector<int>(c.member_count(), -1),
                            s, c.base.bits()};
  search.order.resize(c.member_count());
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    return c.members[a].size() > c.members[b].size();
  });
  if (!search.assign(0)) return std::nullopt;
  OneCoverDecomposition d;
  d.groups.assign(s, {});
  for (size_t pos = 0; pos < search.order.size(); ++pos)
    d.groups[search.assignment[pos]].push_back(search.order[pos]);
  for (auto& g : d.groups) std::sort(g.begin(), g.end());
  return d;
}

CoverFamily random_cover(const IndexSet& sigma, int m, int s, Rng& rng) {
  if (s < 1 || s > m) throw CoverError("random_cover: need 1 <= s <= m");
  if (sigma.empty_set()) throw CoverError("random_cover: empty base");
  const int retry_budget = 1000;
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    std::vector<IndexSet> members(m, IndexSet::empty(sigma.ground()));
    for (int j : sigma.axes()) {
      // Uniform size-s subset of the m members via partial shuffle.
      std::vector<int> idx(m);
      std::iota(idx.begin(), idx.end(), 0);
      for (int k = 0; k < s; ++k) {
        int pick = k + static_cast<int>(rng.next_below(static_cast<uint64_t>(m - k)));
        std::swap(idx[k], idx[pick]);
        members[idx[k]] = members[idx[k]].unite(IndexSet::of(sigma.ground(), {j}));
      }
    }
    bool ok = true;
    for (const auto& mem : members)
      if (mem.empty_set()) { ok = false; break; }
    if (ok) return validate_cover(members, sigma);
  }
  throw GenerationFailed("random_cover: retry budget exhausted (m too large for |sigma| and s)");
}

CoverFamily random_cover(int n, const IndexSet& sigma, int m, int s, uint64_t seed) {
  if (sigma.ground() != n) throw CoverError("random_cover: sigma ground set mismatch");
  Rng rng(seed);
  return random_cover(sigma, m, s, rng);
}

std::string cover_str(const CoverFamily& c) {
  std::string s = "(";
  for (int i = 0; i < c.member_count(); ++i) {
    if (i) s += ",";
    s += c.members[i].str();
  }
  s += ") over " + c.base.str() + ", s=" + std::to_string(c.multiplicity);
  return s;
}

}  // namespace coverineq
