#include <algorithm>
#include <cstdint>

#include "coverineq/polytope.hpp"

namespace coverineq::detail {

namespace {

// Dynamic bitset sized for the row count of one enumeration.
struct TightSet {
  std::vector<uint64_t> words;
  explicit TightSet(size_t nbits) : words((nbits + 63) / 64, 0) {}
  void set(size_t i) { words[i / 64] |= uint64_t{1} << (i % 64); }
  bool subset_of(const TightSet& o) const {
    for (size_t w = 0; w < words.size(); ++w)
      if (words[w] & ~o.words[w]) return false;
    return true;
  }
  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet out(a.words.size() * 64);
    for (size_t w = 0; w < a.words.size(); ++w) out.words[w] = a.words[w] & b.words[w];
    return out;
  }
  int count() const {
    int c = 0;
    for (uint64_t w : words) c += std::popcount(w);
    return c;
  }
};

struct Ray {
  VecQ dir;
  TightSet tight;
};

// Scale to a primitive integer vector, preserving orientation.
VecQ canonical_ray(const VecQ& r) {
  mpz_class lcm_den = 1;
  for (Eigen::Index i = 0; i < r.size(); ++i)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), r(i).den().get_mpz_t());
  std::vector<mpz_class> ints(r.size());
  mpz_class g = 0;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    ints[i] = r(i).num() * (lcm_den / r(i).den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  VecQ out(r.size());
  for (Eigen::Index i = 0; i < r.size(); ++i)
    out(i) = g == 0 ? Rational(0) : Rational(mpq_class(ints[i] / g));
  return out;
}

Rational dot(const VecQ& a, const VecQ& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

}  // namespace

std::vector<VecQ> dd_extreme_rays(const std::vector<VecQ>& rows_in) {
  // Double description with the combinatorial adjacency test.  Starts from a
  // simplicial subcone spanned by D independent rows and inserts the rest.
  std::vector<VecQ> rows;
  for (const auto& r : rows_in) {
    bool zero = true;
    for (Eigen::Index i = 0; i < r.size(); ++i)
      if (!r(i).is_zero()) { zero = false; break; }
    if (!zero) rows.push_back(r);
  }
  if (rows.empty()) throw GeometryError("dd_extreme_rays: no constraints (cone is all of space)");
  const int D = static_cast<int>(rows[0].size());

  auto basis_idx = independent_subset(rows);
  if (static_cast<int>(basis_idx.size()) != D)
    throw GeometryError("dd_extreme_rays: cone is not pointed");

  // Process basis rows first, then the rest in input order.
  std::vector<VecQ> ordered;
  std::vector<char> used(rows.size(), 0);
  for (int i : basis_idx) {
    ordered.push_back(rows[i]);
    used[i] = 1;
  }
  for (size_t i = 0; i < rows.size(); ++i)
    if (!used[i]) ordered.push_back(rows[i]);
  const size_t total = ordered.size();

  MatQ m(D, D);
  for (int i = 0; i < D; ++i) m.row(i) = ordered[i].transpose();
  std::vector<Ray> rays;
  for (int j = 0; j < D; ++j) {
    VecQ e = vecq_zero(D);
    e(j) = Rational(1);
    auto r = solve_square(m, e);
    if (!r) throw GeometryError("dd_extreme_rays: singular initial basis");
    Ray ray{canonical_ray(*r), TightSet(total)};
    for (int i = 0; i < D; ++i)
      if (i != j) ray.tight.set(i);
    rays.push_back(std::move(ray));
  }

  for (size_t row = D; row < total; ++row) {
    const VecQ& a = ordered[row];
    std::vector<Rational> val(rays.size());
    std::vector<int> pos, neg, zero;
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].dir);
      int s = val[i].sign();
      if (s > 0) pos.push_back(static_cast<int>(i));
      else if (s < 0) neg.push_back(static_cast<int>(i));
      else zero.push_back(static_cast<int>(i));
    }
    if (neg.empty()) {
      for (int i : zero) rays[i].tight.set(row);
      continue;
    }

    std::vector<Ray> created;
    for (int ip : pos) {
      for (int in : neg) {
        TightSet common = TightSet::intersect(rays[ip].tight, rays[in].tight);
        if (common.count() < D - 2) continue;  // necessary for adjacency
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (static_cast<int>(k) == ip || static_cast<int>(k) == in) continue;
          if (common.subset_of(rays[k].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        VecQ dir = val[ip] * rays[in].dir - val[in] * rays[ip].dir;
        Ray fresh{canonical_ray(dir), common};
        fresh.tight.set(row);
        created.push_back(std::move(fresh));
      }
    }
    std::vector<Ray> next;
    for (int i : pos) next.push_back(std::move(rays[i]));
    for (int i : zero) {
      rays[i].tight.set(row);
      next.push_back(std::move(rays[i]));
    }
    for (auto& f : created) next.push_back(std::move(f));
    rays = std::move(next);
    if (rays.empty()) break;  // empty cone
  }

  std::vector<VecQ> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.dir));
  return out;
}

std::vector<VecQ> vertex_enum(const std::vector<VecQ>& rows, int k) {
  // Homogenize {a.y >= c} as {a.y - c.w >= 0, w >= 0} and read vertices off
  // the rays with positive last coordinate.
  std::vector<VecQ> cone_rows;
  cone_rows.reserve(rows.size() + 1);
  for (const auto& r : rows) {
    VecQ row(k + 1);
    for (int i = 0; i < k; ++i) row(i) = r(i);
    row(k) = -r(k);
    cone_rows.push_back(std::move(row));
  }
  VecQ wrow = vecq_zero(k + 1);
  wrow(k) = Rational(1);
  cone_rows.push_back(std::move(wrow));

  auto rays = dd_extreme_rays(cone_rows);
  std::vector<VecQ> verts;
  for (const auto& r : rays) {
    if (r(k).is_zero())
      throw GeometryError("vertex_enum: unbounded feasible region");
    if (r(k).sign() < 0) continue;
    VecQ v(k);
    Rational inv = r(k).inv();
    for (int i = 0; i < k; ++i) v(i) = r(i) * inv;
    verts.push_back(std::move(v));
  }
  return verts;
}

}  // namespace coverineq::detail
