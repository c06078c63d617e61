#include "coverineq/logconcave.hpp"

#include <algorithm>
#include <cmath>

#include "coverineq/quadrature.hpp"
#include "coverineq/rng.hpp"

namespace coverineq {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Rational dotq(const VecQ& a, const VecQ& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

double unit_ball_volume(int n) {
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

}  // namespace

LogConcaveFn LogConcaveFn::indicator(RationalPolytope body, Rational height) {
  if (body.is_empty()) throw LogConcaveError("indicator: empty body");
  if (height.sign() <= 0) throw LogConcaveError("indicator: height must be positive");
  int d = body.dim();
  return LogConcaveFn(d, IndicatorFn{std::move(body), std::move(height)});
}

LogConcaveFn LogConcaveFn::gaussian(VecD center, VecD invcov, double height) {
  if (center.size() != invcov.size()) throw DimensionMismatch("gaussian: center/invcov size");
  if (height <= 0) throw LogConcaveError("gaussian: height must be positive");
  for (Eigen::Index i = 0; i < invcov.size(); ++i)
    if (!(invcov(i) > 0)) throw LogConcaveError("gaussian: inverse covariance must be positive");
  int d = static_cast<int>(center.size());
  return LogConcaveFn(d, GaussianFn{std::move(center), std::move(invcov), height});
}

LogConcaveFn LogConcaveFn::exp_concave_pl(RationalPolytope support,
                                          std::vector<AffinePiece> pieces) {
  if (support.is_empty()) throw LogConcaveError("exp_concave_pl: empty support");
  if (pieces.empty()) throw LogConcaveError("exp_concave_pl: no affine pieces");
  for (const auto& p : pieces)
    if (p.gradient.size() != support.dim())
      throw DimensionMismatch("exp_concave_pl: piece dimension mismatch");
  int d = support.dim();
  return LogConcaveFn(d, ExpConcavePLFn{std::move(support), std::move(pieces)});
}

double LogConcaveFn::eval(const VecD& x) const {
  if (x.size() != dim_) throw DimensionMismatch("eval: point dimension");
  if (is_gaussian()) {
    const auto& g = as_gaussian();
    double e = 0;
    for (int i = 0; i < dim_; ++i) {
      double d = x(i) - g.center(i);
      e += g.invcov(i) * d * d;
    }
    return g.height * std::exp(-e);
  }
  const RationalPolytope& supp = is_indicator() ? as_indicator().body : as_pl().support;
  if (!supp.full_dimensional()) return eval_exact_point(to_rational(x));
  for (const auto& f : supp.facets()) {
    double lhs = 0;
    for (int i = 0; i < dim_; ++i) lhs += f.normal(i).to_double() * x(i);
    if (lhs > f.offset.to_double()) return 0.0;
  }
  if (is_indicator()) return as_indicator().height.to_double();
  const auto& pl = as_pl();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pl.pieces) {
    double v = p.constant.to_double();
    for (int i = 0; i < dim_; ++i) v += p.gradient(i).to_double() * x(i);
    best = std::min(best, v);
  }
  return std::exp(best);
}

double LogConcaveFn::eval_exact_point(const VecQ& x) const {
  if (x.size() != dim_) throw DimensionMismatch("eval_exact_point: point dimension");
  if (is_gaussian()) return eval(to_double(x));
  const RationalPolytope& supp = is_indicator() ? as_indicator().body : as_pl().support;
  if (!supp.contains(x)) return 0.0;
  if (is_indicator()) return as_indicator().height.to_double();
  const auto& pl = as_pl();
  Rational best = dotq(pl.pieces[0].gradient, x) + pl.pieces[0].constant;
  for (size_t k = 1; k < pl.pieces.size(); ++k) {
    Rational v = dotq(pl.pieces[k].gradient, x) + pl.pieces[k].constant;
    if (v < best) best = v;
  }
  return std::exp(best.to_double());
}

namespace {

// Exact maximizer of the concave piecewise-linear exponent over the support:
// vertex-enumerate the lifted polytope {(x, t) : t <= piece(x), x in supp}.
std::pair<VecQ, Rational> pl_mode(const ExpConcavePLFn& pl) {
  const int d = pl.support.dim();
  if (!pl.support.full_dimensional()) {
    // Fall back to the best support vertex.
    const auto& verts = pl.support.vertices();
    VecQ best_x = verts[0];
    Rational best(0);
    bool first = true;
    for (const auto& v : verts) {
      Rational val = dotq(pl.pieces[0].gradient, v) + pl.pieces[0].constant;
      for (size_t k = 1; k < pl.pieces.size(); ++k) {
        Rational w = dotq(pl.pieces[k].gradient, v) + pl.pieces[k].constant;
        if (w < val) val = w;
      }
      if (first || best < val) {
        best = val;
        best_x = v;
        first = false;
      }
    }
    return {best_x, best};
  }
  // Lower bound for t: min of the exponent over the support vertices.
  Rational tmin;
  bool first = true;
  for (const auto& v : pl.support.vertices())
    for (const auto& p : pl.pieces) {
      Rational val = dotq(p.gradient, v) + p.constant;
      if (first || val < tmin) { tmin = val; first = false; }
    }
  tmin -= Rational(1);

  std::vector<VecQ> rows;  // a.(x,t) >= c with layout [x..., t, c]
  for (const auto& f : pl.support.facets()) {
    VecQ row(d + 2);
    for (int i = 0; i < d; ++i) row(i) = -f.normal(i);
    row(d) = Rational(0);
    row(d + 1) = -f.offset;
    rows.push_back(std::move(row));
  }
  for (const auto& p : pl.pieces) {
    VecQ row(d + 2);  // piece(x) - t >= 0
    for (int i = 0; i < d; ++i) row(i) = p.gradient(i);
    row(d) = Rational(-1);
    row(d + 1) = -p.constant;
    rows.push_back(std::move(row));
  }
  VecQ row(d + 2);  // t >= tmin
  for (int i = 0; i < d; ++i) row(i) = Rational(0);
  row(d) = Rational(1);
  row(d + 1) = tmin;
  rows.push_back(std::move(row));

  auto verts = detail::vertex_enum(rows, d + 1);
  if (verts.empty()) throw LogConcaveError("exp_concave_pl: empty lifted polytope");
  VecQ best_x(d);
  Rational best_t;
  first = true;
  for (const auto& v : verts) {
    if (first || best_t < v(d)) {
      best_t = v(d);
      for (int i = 0; i < d; ++i) best_x(i) = v(i);
      first = false;
    }
  }
  return {best_x, best_t};
}

}  // namespace

Value LogConcaveFn::sup_norm() const {
  if (is_indicator()) return Value::exact(as_indicator().height);
  if (is_gaussian()) return Value::approx(as_gaussian().height);
  auto [x, t] = pl_mode(as_pl());
  return Value::approx(std::exp(t.to_double()));
}

VecD LogConcaveFn::mode() const {
  if (is_indicator()) return to_double(as_indicator().body.vertex_centroid());
  if (is_gaussian()) return as_gaussian().center;
  return to_double(pl_mode(as_pl()).first);
}

std::pair<VecD, VecD> LogConcaveFn::effective_box() const {
  if (is_gaussian()) {
    const auto& g = as_gaussian();
    VecD lo(dim_), hi(dim_);
    for (int i = 0; i < dim_; ++i) {
      double r = 9.0 / std::sqrt(g.invcov(i));
      lo(i) = g.center(i) - r;
      hi(i) = g.center(i) + r;
    }
    return {lo, hi};
  }
  const RationalPolytope& supp = is_indicator() ? as_indicator().body : as_pl().support;
  auto [lo, hi] = bounding_box(supp);
  return {to_double(lo), to_double(hi)};
}

namespace {

Value integrate_pl(const ExpConcavePLFn& pl) {
  const int d = pl.support.dim();
  if (d > 3) throw UnsupportedDim("exp_concave_pl quadrature limited to dimension 3");
  if (!pl.support.full_dimensional()) return Value::exact(Rational(0));

  // Deduplicate identical pieces; distinct pieces agree only on measure zero.
  std::vector<AffinePiece> pieces;
  for (const auto& p : pl.pieces) {
    bool dup = false;
    for (const auto& q : pieces)
      if (vec_eq(p.gradient, q.gradient) && p.constant == q.constant) { dup = true; break; }
    if (!dup) pieces.push_back(p);
  }

  double total = 0.0;
  for (size_t k = 0; k < pieces.size(); ++k) {
    // Linearity region of piece k: where it attains the minimum.
    std::vector<VecQ> rows;
    for (const auto& f : pl.support.facets()) {
      VecQ row(d + 1);
      for (int i = 0; i < d; ++i) row(i) = -f.normal(i);
      row(d) = -f.offset;
      rows.push_back(std::move(row));
    }
    for (size_t l = 0; l < pieces.size(); ++l) {
      if (l == k) continue;
      VecQ row(d + 1);  // (a_l - a_k).x >= b_k - b_l
      for (int i = 0; i < d; ++i) row(i) = pieces[l].gradient(i) - pieces[k].gradient(i);
      row(d) = pieces[k].constant - pieces[l].constant;
      rows.push_back(std::move(row));
    }
    auto verts = detail::vertex_enum(rows, d);
    if (verts.empty()) continue;
    RationalPolytope region = hull(verts);
    if (!region.full_dimensional()) continue;
    for (const auto& simplex : region.simplices()) {
      std::vector<VecQ> vs;
      std::vector<double> vals;
      for (int id : simplex) {
        vs.push_back(region.vertices()[id]);
        vals.push_back((dotq(pieces[k].gradient, region.vertices()[id]) + pieces[k].constant)
                           .to_double());
      }
      total += integral_exp_over_simplex(vs, vals);
    }
  }
  return Value::approx(total);
}

}  // namespace

Value integrate(const LogConcaveFn& f) {
  if (f.is_indicator()) {
    const auto& ind = f.as_indicator();
    return Value::exact(ind.height * ind.body.volume());
  }
  if (f.is_gaussian()) {
    const auto& g = f.as_gaussian();
    double v = g.height;
    for (int i = 0; i < f.dim(); ++i) v *= std::sqrt(M_PI / g.invcov(i));
    return Value::approx(v);
  }
  return integrate_pl(f.as_pl());
}

Value integrate_restricted(const LogConcaveFn& f, const IndexSet& sigma) {
  if (sigma.ground() != f.dim()) throw DimensionMismatch("integrate_restricted: sigma ground set");
  if (sigma.empty_set()) throw LogConcaveError("integrate_restricted: empty sigma");
  if (sigma.size() == f.dim()) return integrate(f);
  const IndexSet comp = sigma.complement();
  const VecQ zeros = vecq_zero(comp.size());
  return marginal(f, comp, zeros);
}

Value marginal(const LogConcaveFn& f, const IndexSet& sigma, const VecQ& x) {
  if (sigma.ground() != f.dim()) throw DimensionMismatch("marginal: sigma ground set");
  if (static_cast<int>(sigma.size()) != x.size())
    throw DimensionMismatch("marginal: anchor size");
  if (sigma.empty_set()) return integrate(f);

  auto fixed_axes = sigma.axes();
  auto free_axes = sigma.complement().axes();
  if (free_axes.empty()) throw LogConcaveError("marginal: no free coordinates to integrate");

  if (f.is_indicator()) {
    const auto& ind = f.as_indicator();
    RationalPolytope s = section(ind.body, CoordinateFlat{sigma, x});
    return Value::exact(ind.height * s.volume());
  }
  if (f.is_gaussian()) {
    const auto& g = f.as_gaussian();
    double v = g.height;
    for (size_t i = 0; i < fixed_axes.size(); ++i) {
      double d = x(static_cast<Eigen::Index>(i)).to_double() - g.center(fixed_axes[i]);
      v *= std::exp(-g.invcov(fixed_axes[i]) * d * d);
    }
    for (int a : free_axes) v *= std::sqrt(M_PI / g.invcov(a));
    return Value::approx(v);
  }
  const auto& pl = f.as_pl();
  RationalPolytope s = section(pl.support, CoordinateFlat{sigma, x});
  if (s.is_empty()) return Value::exact(Rational(0));
  std::vector<AffinePiece> pieces;
  for (const auto& p : pl.pieces) {
    AffinePiece reduced;
    reduced.gradient = VecQ(static_cast<Eigen::Index>(free_axes.size()));
    for (size_t i = 0; i < free_axes.size(); ++i) reduced.gradient(i) = p.gradient(free_axes[i]);
    Rational c = p.constant;
    for (size_t i = 0; i < fixed_axes.size(); ++i)
      c += p.gradient(fixed_axes[i]) * x(static_cast<Eigen::Index>(i));
    reduced.constant = c;
    pieces.push_back(std::move(reduced));
  }
  return integrate_pl(ExpConcavePLFn{std::move(s), std::move(pieces)});
}

MaxMarginalResult max_marginal(const LogConcaveFn& f, const IndexSet& sigma) {
  if (f.is_indicator()) {
    const auto& ind = f.as_indicator();
    MaxSectionResult mps = max_parallel_section(ind.body, sigma);
    return MaxMarginalResult{mps.anchor, Value::exact(ind.height * mps.value), mps.exact_max};
  }
  if (f.is_gaussian()) {
    const auto& g = f.as_gaussian();
    auto axes = sigma.axes();
    VecQ anchor(static_cast<Eigen::Index>(axes.size()));
    for (size_t i = 0; i < axes.size(); ++i) anchor(i) = Rational::from_double(g.center(axes[i]));
    return MaxMarginalResult{anchor, marginal(f, sigma, anchor), true};
  }
  // Concave ascent over anchors in the projection of the support.
  const auto& pl = f.as_pl();
  RationalPolytope proj = project(pl.support, sigma);
  const int k = sigma.size();
  VecQ anchor = proj.vertex_centroid();
  double best = marginal(f, sigma, anchor).to_double();
  Rational half(1, 2);
  for (int round = 0; round < 2; ++round) {
    for (int c = 0; c < k; ++c) {
      for (double step : {0.25, 0.0625, 0.015625}) {
        for (int dir : {-1, 1}) {
          VecQ trial = anchor;
          trial(c) += Rational::from_double(dir * step);
          if (!proj.contains(trial)) continue;
          double v = marginal(f, sigma, trial).to_double();
          if (v > best) {
            best = v;
            anchor = trial;
          }
        }
      }
    }
  }
  return MaxMarginalResult{anchor, marginal(f, sigma, anchor), false};
}

double superlevel_volume(const LogConcaveFn& f, double t) {
  if (!(t > 0)) throw LogConcaveError("superlevel_volume: level must be positive");
  if (f.is_indicator()) {
    const auto& ind = f.as_indicator();
    return t <= ind.height.to_double() ? ind.body.volume().to_double() : 0.0;
  }
  if (f.is_gaussian()) {
    const auto& g = f.as_gaussian();
    if (t >= g.height) return 0.0;
    double r2 = std::log(g.height / t);
    double v = unit_ball_volume(f.dim()) * std::pow(r2, 0.5 * f.dim());
    for (int i = 0; i < f.dim(); ++i) v /= std::sqrt(g.invcov(i));
    return v;
  }
  const auto& pl = f.as_pl();
  if (!pl.support.full_dimensional()) return 0.0;
  const int d = f.dim();
  Rational level = Rational::from_double(std::log(t));
  std::vector<VecQ> rows;
  for (const auto& fc : pl.support.facets()) {
    VecQ row(d + 1);
    for (int i = 0; i < d; ++i) row(i) = -fc.normal(i);
    row(d) = -fc.offset;
    rows.push_back(std::move(row));
  }
  for (const auto& p : pl.pieces) {
    VecQ row(d + 1);  // a.x >= level - b
    for (int i = 0; i < d; ++i) row(i) = p.gradient(i);
    row(d) = level - p.constant;
    rows.push_back(std::move(row));
  }
  auto verts = detail::vertex_enum(rows, d);
  if (verts.empty()) return 0.0;
  return hull(verts).volume().to_double();
}

// ---------------------------------------------------------------------------
// Sup convolution
// ---------------------------------------------------------------------------

namespace {

double log_eval(const LogConcaveFn& f, const VecD& x) {
  double v = f.eval(x);
  return v > 0 ? std::log(v) : kNegInf;
}

// Gradient of log f where differentiable; zero inside indicator supports.
VecD log_grad(const LogConcaveFn& f, const VecD& x) {
  VecD g = VecD::Zero(f.dim());
  if (f.is_gaussian()) {
    const auto& ga = f.as_gaussian();
    for (int i = 0; i < f.dim(); ++i) g(i) = -2.0 * ga.invcov(i) * (x(i) - ga.center(i));
    return g;
  }
  if (f.is_pl()) {
    const auto& pl = f.as_pl();
    int best = 0;
    double bestv = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < pl.pieces.size(); ++k) {
      double v = pl.pieces[k].constant.to_double();
      for (int i = 0; i < f.dim(); ++i) v += pl.pieces[k].gradient(i).to_double() * x(i);
      if (v < bestv) {
        bestv = v;
        best = static_cast<int>(k);
      }
    }
    for (int i = 0; i < f.dim(); ++i) g(i) = pl.pieces[best].gradient(i).to_double();
  }
  return g;
}

struct SupConvState {
  const std::vector<LogConcaveFn>& factors;
  const VecD& z;
  int n, m;

  // Objective in the perspective variables y_j = lambda_j x_j, with y_m and
  // lambda_m eliminated by the constraints sum y = z, sum lambda = 1.
  double objective(const std::vector<double>& lambda, const std::vector<VecD>& y) const {
    double total = 0.0;
    for (int j = 0; j < m; ++j) {
      if (lambda[j] < 1e-9) return kNegInf;
      double lj = log_eval(factors[j], y[j] / lambda[j]);
      if (lj == kNegInf) return kNegInf;
      total += lambda[j] * lj;
    }
    return total;
  }
};

}  // namespace

double sup_convolution(const std::vector<LogConcaveFn>& factors, const VecD& z, uint64_t seed) {
  if (factors.size() < 2) throw LogConcaveError("sup_convolution: need at least two factors");
  const int n = factors[0].dim();
  for (const auto& f : factors)
    if (f.dim() != n) throw DimensionMismatch("sup_convolution: factor dimensions differ");
  if (z.size() != n) throw DimensionMismatch("sup_convolution: point dimension");
  const int m = static_cast<int>(factors.size());

  // Equal-height indicators: exactly the height on the hull of the supports.
  bool all_ind = true;
  for (const auto& f : factors) all_ind = all_ind && f.is_indicator();
  if (all_ind) {
    bool equal_heights = true;
    for (int j = 1; j < m; ++j)
      equal_heights = equal_heights && factors[j].as_indicator().height ==
                                           factors[0].as_indicator().height;
    if (equal_heights) {
      std::vector<VecQ> pts;
      for (const auto& f : factors)
        for (const auto& v : f.as_indicator().body.vertices()) pts.push_back(v);
      RationalPolytope q = hull(pts);
      return q.contains(to_rational(z)) ? factors[0].as_indicator().height.to_double() : 0.0;
    }
  }

  SupConvState state{factors, z, n, m};
  Rng rng(seed);
  double best = kNegInf;

  for (int restart = 0; restart < 8; ++restart) {
    std::vector<double> lambda(m, 1.0 / m);
    std::vector<VecD> y(m);
    if (restart == 0) {
      for (int j = 0; j < m; ++j) y[j] = z / m;  // x_j = z for every factor
    } else {
      double sum = 0;
      for (int j = 0; j < m; ++j) {
        lambda[j] = 0.05 + rng.next_double();
        sum += lambda[j];
      }
      for (int j = 0; j < m; ++j) lambda[j] /= sum;
      VecD mean = VecD::Zero(n);
      std::vector<VecD> modes(m);
      for (int j = 0; j < m; ++j) {
        modes[j] = factors[j].mode();
        mean += lambda[j] * modes[j];
      }
      VecD shift = z - mean;
      for (int j = 0; j < m; ++j) y[j] = lambda[j] * (modes[j] + shift);
    }
    double cur = state.objective(lambda, y);
    if (cur == kNegInf) continue;

    double step = 0.25;
    for (int iter = 0; iter < 200; ++iter) {
      // Gradients with y_m, lambda_m eliminated.
      std::vector<VecD> gy(m - 1);
      std::vector<double> gl(m - 1);
      VecD um = y[m - 1] / lambda[m - 1];
      VecD grad_m = log_grad(factors[m - 1], um);
      double fm = log_eval(factors[m - 1], um);
      double tail_m = fm - um.dot(grad_m);
      for (int j = 0; j < m - 1; ++j) {
        VecD uj = y[j] / lambda[j];
        VecD gj = log_grad(factors[j], uj);
        double fj = log_eval(factors[j], uj);
        gy[j] = gj - grad_m;
        gl[j] = (fj - uj.dot(gj)) - tail_m;
      }
      bool improved = false;
      double trial_step = step;
      for (int halving = 0; halving < 18 && !improved; ++halving, trial_step *= 0.5) {
        std::vector<double> l2 = lambda;
        std::vector<VecD> y2 = y;
        for (int j = 0; j < m - 1; ++j) {
          l2[j] = lambda[j] + trial_step * gl[j];
          y2[j] = y[j] + trial_step * gy[j];
        }
        double sum = 0;
        bool feasible = true;
        for (int j = 0; j < m - 1; ++j) {
          l2[j] = std::max(l2[j], 1e-9);
          sum += l2[j];
        }
        if (sum > 1.0 - 1e-9) feasible = false;
        if (!feasible) continue;
        l2[m - 1] = 1.0 - sum;
        VecD rest = z;
        for (int j = 0; j < m - 1; ++j) rest -= y2[j];
        y2[m - 1] = rest;
        double v = state.objective(l2, y2);
        if (v > cur + 1e-14) {
          lambda = l2;
          y = y2;
          cur = v;
          improved = true;
          step = trial_step * 2.0;
        }
      }
      if (!improved) break;
    }
    best = std::max(best, cur);
  }
  return best == kNegInf ? 0.0 : std::exp(best);
}

DominationReport check_domination(const std::vector<LogConcaveFn>& factors,
                                  const LogConcaveFn& f, int samples, uint64_t seed) {
  // Exact path: indicator factors below an indicator envelope.
  bool exact = f.is_indicator();
  for (const auto& g : factors) exact = exact && g.is_indicator();
  if (exact) {
    const auto& env = f.as_indicator();
    for (const auto& g : factors) {
      const auto& ind = g.as_indicator();
      if (env.height < ind.height)
        throw LogConcaveError("check_domination: factor height exceeds envelope height");
      for (const auto& v : ind.body.vertices())
        if (!env.body.contains(v))
          throw DominationViolated("check_domination: factor support escapes the envelope",
                                   to_double(v));
    }
    return DominationReport{true, 0, 0.0};
  }

  Rng rng(seed);
  auto [lo, hi] = f.effective_box();
  for (const auto& g : factors) {
    auto [l2, h2] = g.effective_box();
    for (int i = 0; i < f.dim(); ++i) {
      lo(i) = std::min(lo(i), l2(i));
      hi(i) = std::max(hi(i), h2(i));
    }
  }
  const double tol = 1e-6;
  DominationReport rep;
  rep.samples = samples;
  VecD zpt(f.dim());
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < f.dim(); ++i) zpt(i) = lo(i) + (hi(i) - lo(i)) * rng.next_double();
    double fz = f.eval(zpt);
    for (const auto& g : factors)
      if (g.eval(zpt) > fz * (1.0 + tol) + 1e-12)
        throw LogConcaveError("check_domination: precondition f_j <= f fails at a sample");
    double sc = sup_convolution(factors, zpt, rng.next_u64());
    rep.worst_slack = std::max(rep.worst_slack, sc - fz);
    if (sc > fz * (1.0 + tol) + 1e-9)
      throw DominationViolated("check_domination: sup convolution exceeds the envelope", zpt);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Embedded block factors
// ---------------------------------------------------------------------------

std::vector<EmbeddedFactor> embed_factors(const std::vector<LogConcaveFn>& fns) {
  if (fns.size() < 2) throw LogConcaveError("embed_factors: need at least two factors");
  std::vector<int> dims;
  dims.reserve(fns.size());
  for (const auto& f : fns) dims.push_back(f.dim());
  std::vector<EmbeddedFactor> out;
  for (size_t j = 0; j < fns.size(); ++j) out.push_back(EmbeddedFactor{dims, static_cast<int>(j), fns[j]});
  return out;
}

namespace {

std::vector<VecD> split_blocks(const std::vector<int>& dims, const VecD& z) {
  std::vector<VecD> blocks;
  int at = 0;
  for (int d : dims) {
    blocks.push_back(z.segment(at, d));
    at += d;
  }
  return blocks;
}

// phi(lambda) = sum_j lambda_j log f_j(z_j / lambda_j), concave on the simplex.
double embedded_phi(const std::vector<EmbeddedFactor>& factors, const std::vector<VecD>& blocks,
                    const std::vector<double>& lambda) {
  double total = 0.0;
  for (size_t j = 0; j < factors.size(); ++j) {
    double lj = lambda[j];
    if (lj < 1e-9) {
      if (blocks[j].lpNorm<Eigen::Infinity>() > 0) return kNegInf;
      continue;  // lambda -> 0 with a zero block contributes nothing
    }
    double v = log_eval(factors[j].fn, blocks[j] / lj);
    if (v == kNegInf) return kNegInf;
    total += lj * v;
  }
  return total;
}

}  // namespace

namespace {

// Feasible weights {l > 0 : z_block in l * K} for an indicator block, via
// the facet system n.x <= b of K; [0, 1] with a soft lower floor otherwise.
// An empty interval is returned as lo > hi.
std::pair<double, double> weight_interval(const LogConcaveFn& f, const VecD& zblock) {
  if (!f.is_indicator()) return {1e-9, 1.0};
  const auto& body = f.as_indicator().body;
  double lo = 0.0, hi = 1.0;
  if (!body.full_dimensional()) {
    // Degenerate bodies: fall back to membership probes on a coarse grid.
    for (double l = 1.0; l >= 1.0 / 64; l -= 1.0 / 64) {
      VecQ u = to_rational(zblock / l);
      if (body.contains(u)) return {l, l};
    }
    return {1.0, 0.0};
  }
  for (const auto& fc : body.facets()) {
    double nz = 0;
    for (Eigen::Index i = 0; i < zblock.size(); ++i) nz += fc.normal(i).to_double() * zblock(i);
    double b = fc.offset.to_double();
    if (b > 1e-15) lo = std::max(lo, nz / b);
    else if (b < -1e-15) hi = std::min(hi, nz / b);
    else if (nz > 1e-15) return {1.0, 0.0};  // infeasible at every weight
  }
  return {lo, hi};
}

}  // namespace

double supconv_embedded(const std::vector<EmbeddedFactor>& factors, const VecD& z) {
  if (factors.empty()) throw LogConcaveError("supconv_embedded: no factors");
  const auto& dims = factors[0].block_dims;
  auto blocks = split_blocks(dims, z);
  const int m = static_cast<int>(factors.size());

  std::vector<std::pair<double, double>> ivals(m);
  bool all_ind = true;
  for (int j = 0; j < m; ++j) {
    ivals[j] = weight_interval(factors[j].fn, blocks[j]);
    all_ind = all_ind && factors[j].fn.is_indicator();
    // A weight of zero is only admissible when the block is zero (the factor
    // drops out of the decomposition).
    if (blocks[j].lpNorm<Eigen::Infinity>() > 0) ivals[j].first = std::max(ivals[j].first, 1e-12);
  }

  if (all_ind) {
    // Linear objective sum lambda_j log h_j over the box-clipped simplex:
    // start at the lower bounds and spend the slack on the tallest factors.
    double lo_sum = 0, hi_sum = 0;
    for (int j = 0; j < m; ++j) {
      if (ivals[j].first > ivals[j].second + 1e-15) return 0.0;
      lo_sum += ivals[j].first;
      hi_sum += ivals[j].second;
    }
    if (lo_sum > 1.0 + 1e-12 || hi_sum < 1.0 - 1e-12) return 0.0;
    std::vector<double> lambda(m);
    std::vector<int> order(m);
    for (int j = 0; j < m; ++j) {
      lambda[j] = ivals[j].first;
      order[j] = j;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return factors[a].fn.as_indicator().height > factors[b].fn.as_indicator().height;
    });
    double slack = 1.0 - lo_sum;
    for (int j : order) {
      double take = std::min(slack, ivals[j].second - ivals[j].first);
      lambda[j] += take;
      slack -= take;
      if (slack <= 0) break;
    }
    double logv = 0;
    for (int j = 0; j < m; ++j)
      logv += lambda[j] * std::log(factors[j].fn.as_indicator().height.to_double());
    return std::exp(logv);
  }

  if (m == 2) {
    auto phi = [&](double l) { return embedded_phi(factors, blocks, {l, 1.0 - l}); };
    double a = std::max({1e-9, ivals[0].first, 1.0 - ivals[1].second});
    double b = std::min({1.0 - 1e-9, ivals[0].second, 1.0 - ivals[1].first});
    if (a > b) return 0.0;
    const double inv_golden = 0.6180339887498949;
    double x1 = b - inv_golden * (b - a), x2 = a + inv_golden * (b - a);
    double f1 = phi(x1), f2 = phi(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        a = x1; x1 = x2; f1 = f2;
        x2 = a + inv_golden * (b - a); f2 = phi(x2);
      } else {
        b = x2; x2 = x1; f2 = f1;
        x1 = b - inv_golden * (b - a); f1 = phi(x1);
      }
    }
    double best = std::max({phi(a), phi(b), f1, f2});
    return best == kNegInf ? 0.0 : std::exp(best);
  }

  // Coordinate-exchange ascent over the simplex from a box-feasible start.
  double lo_sum = 0, hi_sum = 0;
  for (int j = 0; j < m; ++j) {
    lo_sum += ivals[j].first;
    hi_sum += ivals[j].second;
  }
  double best = kNegInf;
  std::vector<std::vector<double>> inits;
  if (lo_sum <= 1.0 && hi_sum >= 1.0 && hi_sum > lo_sum) {
    double theta = (1.0 - lo_sum) / (hi_sum - lo_sum);
    std::vector<double> feas(m);
    for (int j = 0; j < m; ++j)
      feas[j] = ivals[j].first + theta * (ivals[j].second - ivals[j].first);
    inits.push_back(std::move(feas));
  }
  inits.push_back(std::vector<double>(m, 1.0 / m));
  for (auto& lambda : inits) {
    double cur = embedded_phi(factors, blocks, lambda);
    double step = 0.2;
    for (int iter = 0; iter < 120; ++iter) {
      bool improved = false;
      for (int halving = 0; halving < 14 && !improved; ++halving, step *= 0.5) {
        for (int a = 0; a < m && !improved; ++a)
          for (int b = 0; b < m && !improved; ++b) {
            if (a == b) continue;
            std::vector<double> l2 = lambda;
            double delta = std::min(step, l2[b] - 1e-9);
            if (delta <= 0) continue;
            l2[a] += delta;
            l2[b] -= delta;
            double v = embedded_phi(factors, blocks, l2);
            if (v > cur + 1e-14) {
              lambda = l2;
              cur = v;
              improved = true;
            }
          }
      }
      if (!improved) break;
      step = std::min(step * 4.0, 0.2);
    }
    best = std::max(best, cur);
  }
  return best == kNegInf ? 0.0 : std::exp(best);
}

EmbeddedIntegral supconv_embedded_integral(const std::vector<EmbeddedFactor>& factors,
                                           int mc_samples, uint64_t seed) {
  if (factors.empty()) throw LogConcaveError("supconv_embedded_integral: no factors");
  const auto& dims = factors[0].block_dims;

  bool all_ind = true;
  for (const auto& f : factors) all_ind = all_ind && f.fn.is_indicator();
  if (all_ind) {
    bool equal_heights = true;
    for (size_t j = 1; j < factors.size(); ++j)
      equal_heights = equal_heights && factors[j].fn.as_indicator().height ==
                                           factors[0].fn.as_indicator().height;
    if (equal_heights) {
      // Equal heights: the sup convolution is height times the block-hull indicator.
      std::vector<Block> blocks;
      for (const auto& f : factors)
        blocks.push_back(Block{f.fn.as_indicator().body,
                               vecq_zero(f.fn.as_indicator().body.dim())});
      RationalPolytope c = conv_of_blocks(blocks);
      return EmbeddedIntegral{Value::exact(factors[0].fn.as_indicator().height * c.volume()),
                              0.0};
    }
  }

  // Monte Carlo over the bounding box of the convex hull of the embedded
  // effective supports.
  int total_dim = 0;
  for (int d : dims) total_dim += d;
  VecD lo = VecD::Zero(total_dim), hi = VecD::Zero(total_dim);
  int at = 0;
  for (size_t j = 0; j < factors.size(); ++j) {
    auto [l, h] = factors[j].fn.effective_box();
    for (int i = 0; i < dims[j]; ++i) {
      lo(at + i) = std::min(0.0, l(i));
      hi(at + i) = std::max(0.0, h(i));
    }
    at += dims[j];
  }
  double boxvol = 1.0;
  for (int i = 0; i < total_dim; ++i) boxvol *= hi(i) - lo(i);

  Rng rng(seed);
  double sum = 0.0, sumsq = 0.0;
  VecD z(total_dim);
  for (int s = 0; s < mc_samples; ++s) {
    for (int i = 0; i < total_dim; ++i) z(i) = lo(i) + (hi(i) - lo(i)) * rng.next_double();
    double v = supconv_embedded(factors, z);
    sum += v;
    sumsq += v * v;
  }
  double mean = sum / mc_samples;
  double var = std::max(sumsq / mc_samples - mean * mean, 0.0);
  double est = boxvol * mean;
  double se = boxvol * std::sqrt(var / mc_samples);
  return EmbeddedIntegral{Value::approx(est), se};
}

// ---------------------------------------------------------------------------
// Log-concavity checks
// ---------------------------------------------------------------------------

LogConcavityReport check_log_concavity(const std::function<double(const VecD&)>& f,
                                       const VecD& lo, const VecD& hi, int triples,
                                       uint64_t seed) {
  Rng rng(seed);
  const int n = static_cast<int>(lo.size());
  LogConcavityReport rep;
  rep.triples = triples;
  VecD x(n), y(n);
  const double rel_tol = 1e-9;
  for (int t = 0; t < triples; ++t) {
    for (int i = 0; i < n; ++i) {
      x(i) = lo(i) + (hi(i) - lo(i)) * rng.next_double();
      y(i) = lo(i) + (hi(i) - lo(i)) * rng.next_double();
    }
    double lambda = rng.next_double();
    VecD mid = (1.0 - lambda) * x + lambda * y;
    double fx = f(x), fy = f(y);
    if (fx <= 0 || fy <= 0) continue;
    double rhs = std::pow(fx, 1.0 - lambda) * std::pow(fy, lambda);
    double fm = f(mid);
    double defect = rhs - fm;
    rep.worst_defect = std::max(rep.worst_defect, defect / rhs);
    if (fm < rhs * (1.0 - rel_tol))
      throw LogConcavityViolated("log-concavity violated on a sampled triple", x, y, lambda);
  }
  return rep;
}

LogConcavityReport check_log_concavity(const LogConcaveFn& f, int triples, uint64_t seed) {
  auto [lo, hi] = f.effective_box();
  return check_log_concavity([&f](const VecD& x) { return f.eval(x); }, lo, hi, triples, seed);
}

}  // namespace coverineq
