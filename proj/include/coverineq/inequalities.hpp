#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coverineq/covers.hpp"
#include "coverineq/logconcave.hpp"
#include "coverineq/polytope.hpp"
#include "coverineq/value.hpp"

namespace coverineq {

struct InequalityError : std::runtime_error {
  explicit InequalityError(const std::string& msg) : std::runtime_error(msg) {}
};
struct InvalidCover : InequalityError {
  explicit InvalidCover(const std::string& msg) : InequalityError(msg) {}
};
struct OriginOutside : InequalityError {
  explicit OriginOutside(const std::string& msg) : InequalityError(msg) {}
};
struct NotReducible : InequalityError {
  explicit NotReducible(const std::string& msg) : InequalityError(msg) {}
};
struct NotUnconditional : InequalityError {
  explicit NotUnconditional(const std::string& msg) : InequalityError(msg) {}
};
struct OutOfRange : InequalityError {
  explicit OutOfRange(const std::string& msg) : InequalityError(msg) {}
};
struct HeightExceedsOne : InequalityError {
  explicit HeightExceedsOne(const std::string& msg) : InequalityError(msg) {}
};

// One inequality evaluation.  lhs is always the provably-larger side, so
// every implemented theorem asserts ratio = lhs/rhs >= 1 (up to the recorded
// tolerance on numeric paths).
struct InequalityReport {
  std::string id;
  Value lhs, rhs, ratio;
  Rational constant;
  bool exact = false;      // end-to-end rational arithmetic
  double tolerance = 0.0;  // 0 when exact
  bool equality = false;   // exact and lhs == rhs
  bool holds = false;      // ratio >= 1 - tolerance
  std::optional<bool> equality_predicted;  // equality-case characterization, when one exists

  // Witnesses for reproducing the evaluation.
  std::optional<CoverFamily> cover;
  std::vector<IndexSet> induced;
  std::optional<VecQ> anchor;  // max-section anchor in sigma coordinates
  std::vector<std::string> notes;
};

// Numeric-path tolerance for heuristic max-section searches.
inline constexpr double kNumericTolerance = 1e-6;

// One check per inequality; reports carry the constant and witnesses used.
InequalityReport check_bollobas_thomason(const RationalPolytope& k, const CoverFamily& cover);
InequalityReport check_local_bt(const RationalPolytope& k, const CoverFamily& cover);
InequalityReport check_liakopoulos(const RationalPolytope& k, const CoverFamily& cover);
InequalityReport check_local_meyer_abbc(const RationalPolytope& k, const CoverFamily& cover,
                                        bool swapped = false);
InequalityReport check_aagjv_s1(const RationalPolytope& k, const CoverFamily& cover);
InequalityReport check_thm_sharp_local(const RationalPolytope& k, const CoverFamily& cover);
InequalityReport check_functional_rs(const LogConcaveFn& f, const CoverFamily& cover);
InequalityReport check_cor_marginals(const LogConcaveFn& f, const CoverFamily& cover);
InequalityReport check_abbc_original(const RationalPolytope& k, const CoverFamily& cover,
                                     bool swapped = false);
InequalityReport check_unconditional_improved(const RationalPolytope& k, const IndexSet& sigma);
InequalityReport check_lemma_conv_blocks(const std::vector<Block>& blocks);
InequalityReport check_min_prod(const std::vector<LogConcaveFn>& fns);
InequalityReport check_cap_subspace(const std::vector<Block>& blocks, const IndexSet& sigma);
InequalityReport check_operator_lower_bound(const std::vector<LogConcaveFn>& fns,
                                            int mc_samples = 200000, uint64_t seed = 1);

// Conjecture-form evaluation: the sharp local inequality without the
// reducibility hypothesis.  When `exact_anchor_zero` is set the max-section
// term is taken at the origin on an exactness argument supplied by the
// caller (symmetry or product structure).  `effort` scales the heuristic
// max-section search.
InequalityReport conjecture_ratio(const RationalPolytope& k, const CoverFamily& cover,
                                  bool exact_anchor_zero, int effort = 1);

struct ConstantComparison {
  int n = 0, p = 0;
  Rational ratio;        // exact quotient of the two constants
  double bound = 0.0;    // the proposition's lower bound (double rendering)
  bool holds = false;    // exact integer-power comparison
  std::string note;
};

// Quantified improvement of the unconditional bound over the original form;
// fractional exponents are resolved by comparing 4th powers exactly.
ConstantComparison constant_ratio_prop41(int n, int p);
// Same in the n = |sigma|+1 regime; 16th powers.  Defined for n >= 5.
ConstantComparison constant_ratio_prop42(int n);
// The n = 4 special value of the same quotient (equals 945).
Rational prop42_special_n4();

}  // namespace coverineq
