#include "coverineq/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace coverineq {

namespace {

Rational dot(const VecQ& a, const VecQ& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

std::vector<VecQ> dedupe_sorted(std::vector<VecQ> points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(), vec_eq), points.end());
  return points;
}

std::vector<Halfspace> facet_enum(const std::vector<VecQ>& points, int d) {
  // Facets of conv(points) are the extreme rays of the polar cone
  // {(a0, a) : a0 + a.p >= 0 for all p}; requires the points to span.
  std::vector<VecQ> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    VecQ row(d + 1);
    row(0) = Rational(1);
    for (int i = 0; i < d; ++i) row(i + 1) = p(i);
    rows.push_back(std::move(row));
  }
  auto rays = detail::dd_extreme_rays(rows);
  std::vector<Halfspace> out;
  out.reserve(rays.size());
  for (const auto& r : rays) {
    VecQ normal(d);
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      normal(i) = -r(i + 1);
      nonzero = nonzero || !normal(i).is_zero();
    }
    if (!nonzero) throw GeometryError("facet_enum: degenerate facet normal");
    out.push_back(Halfspace{std::move(normal), r(0)});
  }
  return out;
}

struct LexKey {
  bool operator()(const VecQ& a, const VecQ& b) const { return lex_less(a, b); }
};

// Triangulation of one facet, as index lists into the parent vertex array.
// The facet is affinely isomorphic to its image under dropping a coordinate
// where the facet normal is nonzero, so the recursion preserves simplices.
std::vector<std::vector<int>> triangulate_facet(const std::vector<VecQ>& vertices,
                                                const std::vector<int>& facet_ids,
                                                const Halfspace& facet, int d) {
  if (d == 1) return {facet_ids};  // facet is a single point
  if (static_cast<int>(facet_ids.size()) == d) return {facet_ids};

  int drop = -1;
  for (int i = 0; i < d; ++i)
    if (!facet.normal(i).is_zero()) { drop = i; break; }

  std::map<VecQ, int, LexKey> lookup;
  std::vector<VecQ> flat;
  flat.reserve(facet_ids.size());
  for (int id : facet_ids) {
    VecQ q(d - 1);
    int c = 0;
    for (int i = 0; i < d; ++i)
      if (i != drop) q(c++) = vertices[id](i);
    lookup.emplace(q, id);
    flat.push_back(std::move(q));
  }
  RationalPolytope sub = hull(flat);
  std::vector<std::vector<int>> out;
  for (const auto& simplex : sub.simplices()) {
    std::vector<int> mapped;
    mapped.reserve(simplex.size());
    for (int sid : simplex) mapped.push_back(lookup.at(sub.vertices()[sid]));
    out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

RationalPolytope RationalPolytope::empty(int dim) {
  RationalPolytope p;
  p.dim_ = dim;
  p.hull_dim_ = -1;
  p.volume_ = Rational(0);
  return p;
}

const std::vector<Halfspace>& RationalPolytope::facets() const {
  if (!full_dimensional()) throw GeometryError("facets: polytope is not full-dimensional");
  return facets_;
}

const std::vector<std::vector<int>>& RationalPolytope::simplices() const {
  if (!full_dimensional()) throw GeometryError("simplices: polytope is not full-dimensional");
  return simplices_;
}

bool RationalPolytope::contains(const VecQ& x) const {
  if (is_empty()) return false;
  if (x.size() != dim_) throw GeometryError("contains: dimension mismatch");
  if (hull_dim_ == 0) return vec_eq(x, vertices_[0]);
  if (full_dimensional()) {
    for (const auto& f : facets_)
      if (dot(f.normal, x) > f.offset) return false;
    return true;
  }
  VecQ rel = x - chart_origin_;
  auto t = coordinates_in_span(chart_basis_, rel);
  return t && reduced_->contains(*t);
}

VecQ RationalPolytope::vertex_centroid() const {
  if (is_empty()) throw GeometryError("vertex_centroid: empty polytope");
  VecQ c = vecq_zero(dim_);
  for (const auto& v : vertices_) c += v;
  Rational inv(1, static_cast<long>(vertices_.size()));
  for (int i = 0; i < dim_; ++i) c(i) *= inv;
  return c;
}

RationalPolytope hull(const std::vector<VecQ>& points) {
  if (points.empty()) throw GeometryError("hull: no points");
  const int d = static_cast<int>(points[0].size());
  if (d < 1) throw GeometryError("hull: ambient dimension must be positive");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != d) throw GeometryError("hull: inconsistent point dimensions");

  std::vector<VecQ> pts = dedupe_sorted(points);

  RationalPolytope out;
  out.dim_ = d;
  out.volume_ = Rational(0);

  if (pts.size() == 1) {
    out.hull_dim_ = 0;
    out.vertices_ = std::move(pts);
    return out;
  }

  std::vector<VecQ> diffs;
  diffs.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
  auto basis_ids = independent_subset(diffs);
  const int adim = static_cast<int>(basis_ids.size());
  out.hull_dim_ = adim;

  if (adim < d) {
    // Reduce to exact chart coordinates in the affine hull and recurse.
    out.chart_origin_ = pts[0];
    for (int id : basis_ids) out.chart_basis_.push_back(diffs[id]);
    std::map<VecQ, VecQ, LexKey> back;  // chart coords -> ambient point
    std::vector<VecQ> flat;
    flat.reserve(pts.size());
    for (const auto& p : pts) {
      auto t = coordinates_in_span(out.chart_basis_, p - out.chart_origin_);
      if (!t) throw GeometryError("hull: point escaped its affine hull");
      back.emplace(*t, p);
      flat.push_back(std::move(*t));
    }
    auto reduced = std::make_shared<RationalPolytope>(hull(flat));
    for (const auto& rv : reduced->vertices()) out.vertices_.push_back(back.at(rv));
    std::sort(out.vertices_.begin(), out.vertices_.end(), lex_less);
    out.reduced_ = std::move(reduced);
    return out;
  }

  auto facets = facet_enum(pts, d);

  // Extreme points: tight facet normals must span the whole space.
  std::vector<VecQ> verts;
  for (const auto& p : pts) {
    std::vector<VecQ> tight;
    for (const auto& f : facets)
      if (dot(f.normal, p) == f.offset) tight.push_back(f.normal);
    if (static_cast<int>(tight.size()) >= d &&
        static_cast<int>(independent_subset(tight).size()) == d)
      verts.push_back(p);
  }
  out.vertices_ = std::move(verts);  // already lex sorted
  out.facets_ = std::move(facets);

  // Star triangulation from the lex-least vertex; facets through the apex
  // contribute no volume and are skipped.
  const VecQ& apex = out.vertices_[0];
  std::vector<std::vector<int>> facet_vertices(out.facets_.size());
  for (size_t fi = 0; fi < out.facets_.size(); ++fi)
    for (int vi = 0; vi < static_cast<int>(out.vertices_.size()); ++vi)
      if (dot(out.facets_[fi].normal, out.vertices_[vi]) == out.facets_[fi].offset)
        facet_vertices[fi].push_back(vi);

  Rational vol(0);
  Rational dfact(1);
  for (int i = 2; i <= d; ++i) dfact *= Rational(i);
  for (size_t fi = 0; fi < out.facets_.size(); ++fi) {
    if (dot(out.facets_[fi].normal, apex) == out.facets_[fi].offset) continue;
    auto pieces = triangulate_facet(out.vertices_, facet_vertices[fi], out.facets_[fi], d);
    for (auto& piece : pieces) {
      MatQ edges(d, d);
      for (int j = 0; j < d; ++j) edges.col(j) = out.vertices_[piece[j]] - apex;
      Rational det = exact_det(edges);
      if (det.is_zero()) continue;
      vol += det.abs() / dfact;
      std::vector<int> simplex;
      simplex.reserve(d + 1);
      simplex.push_back(0);
      for (int id : piece) simplex.push_back(id);
      out.simplices_.push_back(std::move(simplex));
    }
  }
  out.volume_ = vol;
  return out;
}

RationalPolytope project(const RationalPolytope& p, const IndexSet& sigma) {
  if (sigma.empty_set()) throw GeometryError("project: empty coordinate set");
  auto axes = sigma.axes();
  const int k = static_cast<int>(axes.size());
  if (p.is_empty()) return RationalPolytope::empty(k);
  std::vector<VecQ> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    VecQ q(k);
    for (int i = 0; i < k; ++i) q(i) = v(axes[i]);
    pts.push_back(std::move(q));
  }
  return hull(pts);
}

RationalPolytope section(const RationalPolytope& p, const CoordinateFlat& flat) {
  auto fixed = flat.fixed.axes();
  if (static_cast<int>(fixed.size()) != flat.anchor.size())
    throw GeometryError("section: anchor size does not match fixed axes");
  if (p.is_empty()) {
    return RationalPolytope::empty(p.dim() - static_cast<int>(fixed.size()));
  }
  if (!p.full_dimensional()) throw GeometryError("section: polytope must be full-dimensional");
  auto free = flat.fixed.complement().axes();
  const int k = static_cast<int>(free.size());
  if (k == 0) throw GeometryError("section: no free coordinates");

  // Substitute the pinned coordinates into each facet halfspace.
  std::vector<VecQ> rows;
  rows.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    VecQ row(k + 1);
    for (int i = 0; i < k; ++i) row(i) = -f.normal(free[i]);
    Rational pinned(0);
    for (size_t i = 0; i < fixed.size(); ++i) pinned += f.normal(fixed[i]) * flat.anchor(i);
    row(k) = pinned - f.offset;  // (-n_free).y >= pinned - offset
    rows.push_back(std::move(row));
  }
  auto verts = detail::vertex_enum(rows, k);
  if (verts.empty()) return RationalPolytope::empty(k);
  return hull(verts);
}

RationalPolytope hanner(int n, const IndexSet& sigma) {
  if (sigma.ground() != n) throw GeometryError("hanner: sigma ground set mismatch");
  auto cross_axes = sigma.axes();
  auto cube_axes = sigma.complement().axes();
  std::vector<VecQ> pts;
  const int patterns = 1 << cube_axes.size();
  auto emit = [&](const VecQ& base) {
    for (int mask = 0; mask < patterns; ++mask) {
      VecQ v = base;
      for (size_t i = 0; i < cube_axes.size(); ++i)
        v(cube_axes[i]) = Rational((mask >> i) & 1 ? 1 : -1);
      pts.push_back(v);
    }
  };
  if (cross_axes.empty()) {
    emit(vecq_zero(n));
  } else {
    for (int axis : cross_axes) {
      for (int sgn : {-1, 1}) {
        VecQ base = vecq_zero(n);
        base(axis) = Rational(sgn);
        emit(base);
      }
    }
  }
  return hull(pts);
}

RationalPolytope conv_of_blocks(const std::vector<Block>& blocks) {
  if (blocks.empty()) throw GeometryError("conv_of_blocks: no blocks");
  std::vector<int> offset(blocks.size() + 1, 0);
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].body.is_empty()) throw GeometryError("conv_of_blocks: empty block body");
    if (blocks[j].anchor.size() != blocks[j].body.dim())
      throw GeometryError("conv_of_blocks: anchor dimension mismatch");
    offset[j + 1] = offset[j] + blocks[j].body.dim();
  }
  const int total = offset.back();
  std::vector<VecQ> pts;
  for (size_t j = 0; j < blocks.size(); ++j) {
    for (const auto& v : blocks[j].body.vertices()) {
      VecQ point(total);
      for (size_t i = 0; i < blocks.size(); ++i) {
        const VecQ& src = (i == j) ? v : blocks[i].anchor;
        for (int c = 0; c < blocks[i].body.dim(); ++c) point(offset[i] + c) = src(c);
      }
      pts.push_back(std::move(point));
    }
  }
  return hull(pts);
}

RationalPolytope cartesian_product(const RationalPolytope& a, const RationalPolytope& b) {
  if (a.is_empty() || b.is_empty()) return RationalPolytope::empty(a.dim() + b.dim());
  std::vector<VecQ> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& va : a.vertices())
    for (const auto& vb : b.vertices()) {
      VecQ v(a.dim() + b.dim());
      for (int i = 0; i < a.dim(); ++i) v(i) = va(i);
      for (int i = 0; i < b.dim(); ++i) v(a.dim() + i) = vb(i);
      pts.push_back(std::move(v));
    }
  return hull(pts);
}

RationalPolytope scale_axes(const RationalPolytope& p, const VecQ& factors) {
  if (p.is_empty()) return p;
  if (factors.size() != p.dim()) throw GeometryError("scale_axes: dimension mismatch");
  std::vector<VecQ> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    VecQ q(p.dim());
    for (int i = 0; i < p.dim(); ++i) q(i) = v(i) * factors(i);
    pts.push_back(std::move(q));
  }
  return hull(pts);
}

RationalPolytope translate(const RationalPolytope& p, const VecQ& shift) {
  if (p.is_empty()) return p;
  if (shift.size() != p.dim()) throw GeometryError("translate: dimension mismatch");
  std::vector<VecQ> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(v + shift);
  return hull(pts);
}

bool centrally_symmetric(const RationalPolytope& p) {
  if (p.is_empty()) return false;
  std::set<VecQ, LexKey> verts(p.vertices().begin(), p.vertices().end());
  for (const auto& v : p.vertices())
    if (!verts.count(-v)) return false;
  return true;
}

bool is_unconditional(const RationalPolytope& p) {
  // The vertex set of an unconditional body is closed under coordinate sign
  // flips, since each flip is a linear automorphism of the body.
  if (p.is_empty()) return false;
  std::set<VecQ, LexKey> verts(p.vertices().begin(), p.vertices().end());
  const int n = p.dim();
  for (const auto& v : p.vertices()) {
    for (int mask = 1; mask < (1 << n); ++mask) {
      VecQ w = v;
      for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) w(i) = -w(i);
      if (!verts.count(w)) return false;
    }
  }
  return true;
}

std::pair<VecQ, VecQ> bounding_box(const RationalPolytope& p) {
  if (p.is_empty()) throw GeometryError("bounding_box: empty polytope");
  VecQ lo = p.vertices()[0], hi = p.vertices()[0];
  for (const auto& v : p.vertices())
    for (int i = 0; i < p.dim(); ++i) {
      if (v(i) < lo(i)) lo(i) = v(i);
      if (hi(i) < v(i)) hi(i) = v(i);
    }
  return {lo, hi};
}

McVolume mc_volume(const RationalPolytope& p, int samples, uint64_t seed) {
  if (!p.full_dimensional()) throw GeometryError("mc_volume: polytope must be full-dimensional");
  if (samples < 1) throw GeometryError("mc_volume: need at least one sample");
  auto [lo, hi] = bounding_box(p);
  const int n = p.dim();
  VecD lod = to_double(lo), hid = to_double(hi);
  double boxvol = 1.0;
  for (int i = 0; i < n; ++i) boxvol *= hid(i) - lod(i);

  std::vector<VecD> normals;
  std::vector<double> offsets;
  for (const auto& f : p.facets()) {
    normals.push_back(to_double(f.normal));
    offsets.push_back(f.offset.to_double());
  }

  Rng rng(seed);
  long hits = 0;
  VecD x(n);
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < n; ++i) x(i) = lod(i) + (hid(i) - lod(i)) * rng.next_double();
    bool inside = true;
    for (size_t f = 0; f < normals.size(); ++f)
      if (normals[f].dot(x) > offsets[f]) { inside = false; break; }
    if (inside) ++hits;
  }
  double frac = static_cast<double>(hits) / samples;
  double est = boxvol * frac;
  double se = boxvol * std::sqrt(std::max(frac * (1.0 - frac), 1e-12) / samples);
  return McVolume{est, se};
}

namespace {

Rational section_volume_at(const RationalPolytope& p, const IndexSet& sigma, const VecQ& anchor) {
  RationalPolytope s = section(p, CoordinateFlat{sigma, anchor});
  return s.volume();
}

// Feasible parameter interval for anchor + t*e_axis staying inside proj.
std::pair<double, double> axis_interval(const RationalPolytope& proj, const VecQ& anchor,
                                        int coord) {
  double lo = -1e30, hi = 1e30;
  for (const auto& f : proj.facets()) {
    double slope = f.normal(coord).to_double();
    double slack = (f.offset - dot(f.normal, anchor)).to_double();
    if (slope > 1e-15) hi = std::min(hi, slack / slope);
    else if (slope < -1e-15) lo = std::max(lo, slack / slope);
  }
  return {lo, hi};
}

Rational snap(double x) {
  // Round to a modest dyadic grid so downstream exact arithmetic stays small.
  const double grid = 1048576.0;  // 2^20
  return Rational(static_cast<long>(std::llround(x * grid)), static_cast<long>(grid));
}

}  // namespace

MaxSectionResult max_parallel_section(const RationalPolytope& p, const IndexSet& sigma,
                                      int effort) {
  if (!p.full_dimensional()) throw GeometryError("max_parallel_section: need a full-dimensional body");
  if (sigma.empty_set()) throw GeometryError("max_parallel_section: empty sigma");
  if (sigma.size() >= p.dim())
    throw GeometryError("max_parallel_section: sigma must be a proper subset of the axes");
  effort = std::max(effort, 1);

  const auto axes = sigma.axes();
  const int k = static_cast<int>(axes.size());
  const int codim = p.dim() - k;

  if (centrally_symmetric(p)) {
    // Brunn concavity plus evenness puts the maximum at the origin.
    VecQ origin = vecq_zero(k);
    return MaxSectionResult{origin, section_volume_at(p, sigma, origin), true};
  }

  RationalPolytope proj = project(p, sigma);
  auto eval = [&](const VecQ& anchor) {
    return std::pow(std::max(section_volume_at(p, sigma, anchor).to_double(), 0.0),
                    1.0 / codim);
  };

  VecQ center = proj.vertex_centroid();
  std::vector<VecQ> starts{center};
  Rational half(1, 2);
  const size_t max_starts = 6 * static_cast<size_t>(effort) + 1;
  for (size_t i = 0; i < proj.vertices().size() && starts.size() < max_starts; ++i) {
    VecQ mid(k);
    for (int c = 0; c < k; ++c) mid(c) = (proj.vertices()[i](c) + center(c)) * half;
    starts.push_back(std::move(mid));
  }

  const double golden = 0.6180339887498949;
  const int rounds = 2 + effort;
  const int golden_iters = 20 + 8 * effort;
  VecQ best_anchor = center;
  double best = eval(center);
  for (const auto& start : starts) {
    VecQ anchor = start;
    double current = eval(anchor);
    for (int round = 0; round < rounds; ++round) {
      for (int c = 0; c < k; ++c) {
        auto [lo, hi] = axis_interval(proj, anchor, c);
        if (!(hi - lo > 1e-12)) continue;
        double base = anchor(c).to_double();
        double a = lo, b = hi;
        double x1 = b - golden * (b - a), x2 = a + golden * (b - a);
        auto probe = [&](double t) {
          VecQ trial = anchor;
          trial(c) = snap(base + t);
          if (!proj.contains(trial)) return -1.0;
          return eval(trial);
        };
        double f1 = probe(x1), f2 = probe(x2);
        for (int it = 0; it < golden_iters; ++it) {
          if (f1 < f2) {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + golden * (b - a); f2 = probe(x2);
          } else {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - golden * (b - a); f1 = probe(x1);
          }
        }
        double t = f1 > f2 ? x1 : x2;
        // Boundary anchors can carry the maximum (simplex-like bodies), so
        // probe the exact interval endpoints as well.
        Rational base_q = anchor(c);
        std::vector<Rational> candidates{snap(base + t),
                                         base_q + Rational::from_double(lo),
                                         base_q + Rational::from_double(hi)};
        for (const Rational& cand : candidates) {
          VecQ trial = anchor;
          trial(c) = cand;
          if (!proj.contains(trial)) continue;
          double v = eval(trial);
          if (v > current) {
            current = v;
            anchor = trial;
          }
        }
      }
    }
    if (current > best) {
      best = current;
      best_anchor = anchor;
    }
  }
  return MaxSectionResult{best_anchor, section_volume_at(p, sigma, best_anchor), false};
}

RationalPolytope random_polytope(int n, BodyKind kind, Rng& rng) {
  if (n < 2 || n > 6) throw GeometryError("random_polytope: dimension must be in [2, 6]");
  const int budget = 200;
  if (kind == BodyKind::general) {
    for (int attempt = 0; attempt < budget; ++attempt) {
      std::vector<VecQ> pts;
      for (int i = 0; i < 2 * n + 4; ++i) {
        VecQ v(n);
        for (int c = 0; c < n; ++c) v(c) = rng.next_rational(8);
        pts.push_back(std::move(v));
      }
      RationalPolytope p = hull(pts);
      if (!p.full_dimensional()) continue;
      bool origin_interior = true;
      for (const auto& f : p.facets())
        if (f.offset.sign() <= 0) { origin_interior = false; break; }
      if (origin_interior) return p;
    }
    throw GeometryError("random_polytope: retry budget exhausted (general)");
  }
  if (kind == BodyKind::unconditional) {
    const int generators = std::max(2, n - 1);
    std::vector<VecQ> pts;
    for (int g = 0; g < generators; ++g) {
      VecQ v(n);
      for (int c = 0; c < n; ++c) v(c) = rng.next_rational_unit(8);
      for (int mask = 0; mask < (1 << n); ++mask) {
        VecQ w = v;
        for (int c = 0; c < n; ++c)
          if ((mask >> c) & 1) w(c) = -w(c);
        pts.push_back(std::move(w));
      }
    }
    return hull(pts);  // sign orbit of strictly positive points is full-dimensional
  }
  throw GeometryError("random_polytope: product bodies need a sigma; use random_product_polytope");
}

RationalPolytope random_polytope(int n, BodyKind kind, uint64_t seed) {
  Rng rng(seed);
  return random_polytope(n, kind, rng);
}

namespace {

// Segment [-a, b] with 0 strictly inside; the 1-dimensional factor case.
RationalPolytope random_segment(Rng& rng) {
  VecQ lo(1), hi(1);
  lo(0) = -rng.next_rational_unit(8);
  hi(0) = rng.next_rational_unit(8);
  return hull({lo, hi});
}

}  // namespace

RationalPolytope random_product_polytope(int n, const IndexSet& sigma, Rng& rng) {
  if (sigma.ground() != n) throw GeometryError("random_product_polytope: ground set mismatch");
  if (sigma.empty_set() || sigma.size() >= n)
    throw GeometryError("random_product_polytope: sigma must be nonempty and proper");
  const int k = sigma.size();
  RationalPolytope c = k == 1 ? random_segment(rng) : random_polytope(k, BodyKind::general, rng);
  const int w = n - k;
  RationalPolytope q = w == 1 ? random_segment(rng) : random_polytope(w, BodyKind::general, rng);

  auto caxes = sigma.axes();
  auto waxes = sigma.complement().axes();
  std::vector<VecQ> pts;
  for (const auto& vc : c.vertices())
    for (const auto& vw : q.vertices()) {
      VecQ v = vecq_zero(n);
      for (int i = 0; i < k; ++i) v(caxes[i]) = vc(i);
      for (int i = 0; i < w; ++i) v(waxes[i]) = vw(i);
      pts.push_back(std::move(v));
    }
  return hull(pts);
}

int compare_root_sum(const Rational& a, const Rational& b, const Rational& c, int k) {
  if (a.sign() < 0 || b.sign() < 0 || c.sign() < 0)
    throw GeometryError("compare_root_sum: negative input");
  if (k < 1) throw GeometryError("compare_root_sum: bad exponent");
  if (k == 1) return (a + b - c - c).sign();
  if (a == b && b == c) return 0;

  mpz_class prec("4294967296");  // 2^32
  for (int round = 0; round < 4; ++round) {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), prec.get_mpz_t(), static_cast<unsigned long>(k));
    auto bounds = [&](const Rational& q) {
      mpz_class scaled = (q.num() * pk) / q.den();
      mpz_class root;
      mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(k));
      return std::pair<mpz_class, mpz_class>(root, root + 2);
    };
    auto [alo, ahi] = bounds(a);
    auto [blo, bhi] = bounds(b);
    auto [clo, chi] = bounds(c);
    if (alo + blo > 2 * chi) return 1;
    if (ahi + bhi < 2 * clo) return -1;
    prec *= prec;
  }
  // Indistinguishable at 2^512 precision; treat as equal.
  return 0;
}

}  // namespace coverineq
