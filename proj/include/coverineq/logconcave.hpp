#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "coverineq/index_set.hpp"
#include "coverineq/polytope.hpp"
#include "coverineq/value.hpp"

namespace coverineq {

struct LogConcaveError : std::runtime_error {
  explicit LogConcaveError(const std::string& msg) : std::runtime_error(msg) {}
};
struct UnsupportedDim : LogConcaveError {
  explicit UnsupportedDim(const std::string& msg) : LogConcaveError(msg) {}
};
struct DimensionMismatch : LogConcaveError {
  explicit DimensionMismatch(const std::string& msg) : LogConcaveError(msg) {}
};
struct DominationViolated : LogConcaveError {
  VecD point;
  DominationViolated(const std::string& msg, VecD z) : LogConcaveError(msg), point(std::move(z)) {}
};
struct LogConcavityViolated : LogConcaveError {
  VecD x, y;
  double lambda;
  LogConcavityViolated(const std::string& msg, VecD x_, VecD y_, double l)
      : LogConcaveError(msg), x(std::move(x_)), y(std::move(y_)), lambda(l) {}
};

// height * chi_body
struct IndicatorFn {
  RationalPolytope body;
  Rational height;
};

// height * exp(-sum_i invcov_i (x_i - center_i)^2); diagonal inverse covariance.
struct GaussianFn {
  VecD center;
  VecD invcov;
  double height;
};

struct AffinePiece {
  VecQ gradient;
  Rational constant;
};

// exp(min_k (gradient_k . x + constant_k)) on a compact polytopal support.
struct ExpConcavePLFn {
  RationalPolytope support;
  std::vector<AffinePiece> pieces;
};

// Closed-world log-concave families: each provides an analytic sup, a mode
// point, and a reliable integral, which arbitrary callables could not.
class LogConcaveFn {
public:
  static LogConcaveFn indicator(RationalPolytope body, Rational height);
  static LogConcaveFn gaussian(VecD center, VecD invcov, double height);
  static LogConcaveFn exp_concave_pl(RationalPolytope support, std::vector<AffinePiece> pieces);

  int dim() const { return dim_; }

  bool is_indicator() const { return std::holds_alternative<IndicatorFn>(fam_); }
  bool is_gaussian() const { return std::holds_alternative<GaussianFn>(fam_); }
  bool is_pl() const { return std::holds_alternative<ExpConcavePLFn>(fam_); }
  const IndicatorFn& as_indicator() const { return std::get<IndicatorFn>(fam_); }
  const GaussianFn& as_gaussian() const { return std::get<GaussianFn>(fam_); }
  const ExpConcavePLFn& as_pl() const { return std::get<ExpConcavePLFn>(fam_); }

  double eval(const VecD& x) const;        // fast path, double membership tests
  double eval_exact_point(const VecQ& x) const;  // exact membership on the support

  Value sup_norm() const;
  VecD mode() const;

  // Axis-aligned box outside which the function is zero or negligible.
  std::pair<VecD, VecD> effective_box() const;

private:
  LogConcaveFn(int dim, std::variant<IndicatorFn, GaussianFn, ExpConcavePLFn> fam)
      : dim_(dim), fam_(std::move(fam)) {}
  int dim_;
  std::variant<IndicatorFn, GaussianFn, ExpConcavePLFn> fam_;
};

// Integral over the whole space.  Exact for indicators, closed form for
// Gaussians, piecewise-exact exponential integration for the PL family
// (supported up to dimension 3).
Value integrate(const LogConcaveFn& f);

// Integral of the restriction to the coordinate subspace H_sigma.
Value integrate_restricted(const LogConcaveFn& f, const IndexSet& sigma);

// Fiber integral over x + H_sigma^perp with the sigma coordinates pinned to x.
Value marginal(const LogConcaveFn& f, const IndexSet& sigma, const VecQ& x);

struct MaxMarginalResult {
  VecQ anchor;
  Value value;
  bool exact_max;
};

// Maximizes the marginal over anchors; log-concavity of the marginal (via
// Prekopa-Leindler) justifies concave ascent.
MaxMarginalResult max_marginal(const LogConcaveFn& f, const IndexSet& sigma);

// Volume of the superlevel set {f >= t}.
double superlevel_volume(const LogConcaveFn& f, double t);

// sup over decompositions z = sum lambda_j x_j of prod f_j(x_j)^lambda_j.
// Exact for equal-height indicator families (hull membership); projected
// gradient ascent with restarts otherwise.
double sup_convolution(const std::vector<LogConcaveFn>& factors, const VecD& z,
                       uint64_t seed = 1);

struct DominationReport {
  bool ok = true;
  int samples = 0;
  double worst_slack = 0.0;  // max over samples of supconv(z) - f(z)
};

// Prop-2.2(iii)-style check: factors pointwise below f imply the sup
// convolution stays below f.  Throws DominationViolated on failure.
DominationReport check_domination(const std::vector<LogConcaveFn>& factors,
                                  const LogConcaveFn& f, int samples, uint64_t seed);

// F_j(x_1, ..., x_m) = f_j(x_j) * chi_{0}(other blocks).
struct EmbeddedFactor {
  std::vector<int> block_dims;
  int index = 0;
  LogConcaveFn fn;
};

std::vector<EmbeddedFactor> embed_factors(const std::vector<LogConcaveFn>& fns);

// Pointwise evaluation of the sup convolution of embedded factors; the block
// structure reduces it to a concave problem over the simplex of weights.
double supconv_embedded(const std::vector<EmbeddedFactor>& factors, const VecD& z);

struct EmbeddedIntegral {
  Value value;
  double stderr_ = 0.0;  // nonzero only on the Monte Carlo path
};

// Integral of the embedded sup convolution: exact hull volume for
// equal-height indicators, Monte Carlo with reported error otherwise.
EmbeddedIntegral supconv_embedded_integral(const std::vector<EmbeddedFactor>& factors,
                                           int mc_samples, uint64_t seed);

struct LogConcavityReport {
  bool ok = true;
  int triples = 0;
  double worst_defect = 0.0;
};

// Midpoint test of f((1-l)x + l y) >= f(x)^(1-l) f(y)^l on sampled triples.
LogConcavityReport check_log_concavity(const LogConcaveFn& f, int triples, uint64_t seed);
LogConcavityReport check_log_concavity(const std::function<double(const VecD&)>& f,
                                       const VecD& lo, const VecD& hi, int triples,
                                       uint64_t seed);

}  // namespace coverineq
