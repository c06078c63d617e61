#include "coverineq/linalg.hpp"

namespace coverineq {

namespace {

// Row echelon reduction in place; returns pivot columns.  Division is exact,
// so plain first-nonzero pivoting is fine (no stability concerns).
std::vector<int> echelon(MatQ& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    Rational inv = a(r, c).inv();
    for (Eigen::Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int exact_rank(MatQ a) {
  return static_cast<int>(echelon(a).size());
}

Rational exact_det(MatQ a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("exact_det: non-square matrix");
  Rational det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (!a(i, c).is_zero()) { p = i; break; }
    if (p < 0) return Rational(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inv();
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<VecQ> solve_square(MatQ a, VecQ b) {
  const Eigen::Index n = a.rows();
  if (n != a.cols() || b.size() != n) throw std::invalid_argument("solve_square: shape mismatch");
  MatQ aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  auto pivots = echelon(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || (!pivots.empty() && pivots.back() == n))
    return std::nullopt;
  VecQ x = vecq_zero(static_cast<int>(n));
  for (Eigen::Index i = 0; i < n; ++i) x(pivots[i]) = aug(i, n);
  return x;
}

std::vector<int> independent_subset(const std::vector<VecQ>& vectors) {
  std::vector<int> chosen;
  if (vectors.empty()) return chosen;
  const Eigen::Index dim = vectors[0].size();
  MatQ acc(dim, 0);
  for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
    MatQ trial(dim, acc.cols() + 1);
    trial.leftCols(acc.cols()) = acc;
    trial.col(acc.cols()) = vectors[i];
    if (exact_rank(trial) == trial.cols()) {
      acc = trial;
      chosen.push_back(i);
      if (acc.cols() == dim) break;
    }
  }
  return chosen;
}

std::optional<VecQ> coordinates_in_span(const std::vector<VecQ>& basis, const VecQ& v) {
  const int r = static_cast<int>(basis.size());
  if (r == 0) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return std::nullopt;
    return VecQ(0);
  }
  const Eigen::Index dim = v.size();
  MatQ b(dim, r);
  for (int j = 0; j < r; ++j) b.col(j) = basis[j];

  // Solve on r independent rows, then verify the remaining rows.
  std::vector<VecQ> rows;
  rows.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) rows.push_back(b.row(i).transpose());
  auto rowidx = independent_subset(rows);
  if (static_cast<int>(rowidx.size()) != r) throw std::invalid_argument("coordinates_in_span: dependent basis");
  MatQ sq(r, r);
  VecQ rhs(r);
  for (int i = 0; i < r; ++i) {
    sq.row(i) = b.row(rowidx[i]);
    rhs(i) = v(rowidx[i]);
  }
  auto t = solve_square(sq, rhs);
  if (!t) return std::nullopt;
  VecQ check = b * (*t);
  for (Eigen::Index i = 0; i < dim; ++i)
    if (check(i) != v(i)) return std::nullopt;
  return t;
}

}  // namespace coverineq
