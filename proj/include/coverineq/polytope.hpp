#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coverineq/index_set.hpp"
#include "coverineq/linalg.hpp"
#include "coverineq/rng.hpp"
#include "coverineq/types.hpp"

namespace coverineq {

struct GeometryError : std::runtime_error {
  explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Closed halfspace {x : normal . x <= offset} with primitive integer normal.
struct Halfspace {
  VecQ normal;
  Rational offset;
};

// Polytope in V-representation with exact rational coordinates.  Vertices
// are exactly the extreme points.  Full-dimensional bodies carry their facet
// halfspaces and a star triangulation (vertex-index simplices); bodies of
// lower affine dimension carry an exact chart into their affine hull and the
// reduced full-dimensional polytope in chart coordinates.  Immutable after
// construction; all caches are built eagerly.
class RationalPolytope {
public:
  RationalPolytope() = default;  // empty placeholder; assign before use
  static RationalPolytope empty(int dim);

  int dim() const { return dim_; }
  int hull_dim() const { return hull_dim_; }  // -1 when empty
  bool is_empty() const { return hull_dim_ < 0; }
  bool full_dimensional() const { return hull_dim_ == dim_ && dim_ > 0; }

  const std::vector<VecQ>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& facets() const;
  const std::vector<std::vector<int>>& simplices() const;

  // Ambient-dimension Lebesgue measure; zero for degenerate bodies.
  const Rational& volume() const { return volume_; }

  bool contains(const VecQ& x) const;
  VecQ vertex_centroid() const;

private:
  friend RationalPolytope hull(const std::vector<VecQ>& points);

  int dim_ = 0;
  int hull_dim_ = -1;
  std::vector<VecQ> vertices_;
  Rational volume_;
  // full-dimensional caches
  std::vector<Halfspace> facets_;
  std::vector<std::vector<int>> simplices_;
  // lower-dimensional chart: x = chart_origin + chart_basis * t
  VecQ chart_origin_;
  std::vector<VecQ> chart_basis_;
  std::shared_ptr<const RationalPolytope> reduced_;
};

// Coordinate flat x + H_sigma^perp: the axes in `fixed` are pinned to the
// anchor values (anchor entries follow ascending axis order).
struct CoordinateFlat {
  IndexSet fixed;
  VecQ anchor;
};

RationalPolytope hull(const std::vector<VecQ>& points);

inline Rational volume(const RationalPolytope& p) { return p.volume(); }

// Orthogonal projection onto the sigma coordinates, re-hulled in R^|sigma|.
RationalPolytope project(const RationalPolytope& p, const IndexSet& sigma);

// P intersected with the flat, represented in the free coordinates
// (ascending axis order).  Empty sections yield the empty body.
RationalPolytope section(const RationalPolytope& p, const CoordinateFlat& flat);

struct MaxSectionResult {
  VecQ anchor;      // point of H_sigma, in sigma coordinates
  Rational value;   // exact section volume at the returned anchor
  bool exact_max;   // true when the anchor is provably optimal (symmetry)
};

// Maximizes x -> vol(P cap (x + H_sigma^perp)) over the projection of P.
// Centrally symmetric bodies take anchor 0 directly; otherwise multi-start
// coordinate ascent on the Brunn-concave power of the section volume.
// `effort` scales rounds, starts, and line-search iterations.
MaxSectionResult max_parallel_section(const RationalPolytope& p, const IndexSet& sigma,
                                      int effort = 1);

// conv({+-e_j : j in sigma}) x prod_{j not in sigma} [-1, 1].
RationalPolytope hanner(int n, const IndexSet& sigma);

struct Block {
  RationalPolytope body;
  VecQ anchor;
};

// conv of the blockwise embeddings {x_1} x ... x K_j x ... x {x_m}.
RationalPolytope conv_of_blocks(const std::vector<Block>& blocks);

enum class BodyKind { general, unconditional, product };

RationalPolytope random_polytope(int n, BodyKind kind, uint64_t seed);
RationalPolytope random_polytope(int n, BodyKind kind, Rng& rng);
// Product body (C in H_sigma) x (W in H_sigma^perp); sections parallel to
// H_sigma^perp are translates of each other by construction.
RationalPolytope random_product_polytope(int n, const IndexSet& sigma, Rng& rng);

struct McVolume {
  double estimate;
  double stderr_;
};

// Rejection sampling in the bounding box; unbiased, with standard error.
McVolume mc_volume(const RationalPolytope& p, int samples, uint64_t seed);

RationalPolytope cartesian_product(const RationalPolytope& a, const RationalPolytope& b);
RationalPolytope scale_axes(const RationalPolytope& p, const VecQ& factors);
RationalPolytope translate(const RationalPolytope& p, const VecQ& shift);

bool centrally_symmetric(const RationalPolytope& p);
bool is_unconditional(const RationalPolytope& p);

std::pair<VecQ, VecQ> bounding_box(const RationalPolytope& p);

// Decides sign(a^(1/k) + b^(1/k) - 2 c^(1/k)) exactly for nonnegative
// rationals, by integer k-th root bounds at escalating precision.
int compare_root_sum(const Rational& a, const Rational& b, const Rational& c, int k);

namespace detail {
// Extreme rays of the pointed cone {x : rows[i] . x >= 0}; rays are returned
// as primitive integer vectors.
std::vector<VecQ> dd_extreme_rays(const std::vector<VecQ>& rows);
// Vertices of {y : rows[i].head(k) . y >= rows[i](k)} for bounded systems.
std::vector<VecQ> vertex_enum(const std::vector<VecQ>& rows, int k);
}  // namespace detail

}  // namespace coverineq
