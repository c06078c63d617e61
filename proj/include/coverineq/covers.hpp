#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverineq/index_set.hpp"
#include "coverineq/rng.hpp"

namespace coverineq {

struct CoverError : std::runtime_error {
  explicit CoverError(const std::string& msg) : std::runtime_error(msg) {}
};
struct EmptyMember : CoverError {
  int member;
  explicit EmptyMember(int i);
};
struct NotSubset : CoverError {
  int member;
  explicit NotSubset(int i);
};
struct NonUniformMultiplicity : CoverError {
  int axis1, axis2, count1, count2;
  NonUniformMultiplicity(int j1, int j2, int c1, int c2);
};
struct MemberEqualsBase : CoverError {
  int member;
  explicit MemberEqualsBase(int i);
};
struct GenerationFailed : CoverError {
  explicit GenerationFailed(const std::string& what) : CoverError(what) {}
};

// An s-cover (sigma_1, ..., sigma_m) of a base set sigma: every element of
// the base lies in exactly s members.  Immutable once validated.
struct CoverFamily {
  IndexSet base;
  std::vector<IndexSet> members;
  int multiplicity = 0;  // s

  int member_count() const { return static_cast<int>(members.size()); }
};

// Partition of the member indices {0, ..., m-1} into s groups, each group a
// 1-cover (set partition) of the base.
struct OneCoverDecomposition {
  std::vector<std::vector<int>> groups;
};

CoverFamily validate_cover(const std::vector<IndexSet>& members, const IndexSet& base);

// (sigma \ sigma_1, ..., sigma \ sigma_m), validated as an (m-s)-cover.
CoverFamily complement_cover(const CoverFamily& c);

// Partition of the base into maximal blocks with identical membership
// signature across all members; sorted by smallest element.
std::vector<IndexSet> induced_one_cover(const CoverFamily& c);

// Backtracking search for a decomposition into s parallel 1-covers.
std::optional<OneCoverDecomposition> is_one_reducible(const CoverFamily& c);

CoverFamily random_cover(int n, const IndexSet& sigma, int m, int s, uint64_t seed);
CoverFamily random_cover(const IndexSet& sigma, int m, int s, Rng& rng);

std::string cover_str(const CoverFamily& c);

}  // namespace coverineq
