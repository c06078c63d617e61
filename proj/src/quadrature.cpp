#include "coverineq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coverineq/linalg.hpp"

namespace coverineq {

namespace {

double simpson_rule(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b,
                   double fb, double m, double fm, double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson_rule(a, fa, m, fm, flm);
  double right = simpson_rule(m, fm, b, fb, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (!(b > a)) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson_rule(a, fa, b, fb, fm);
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double divided_difference_exp(const std::vector<double>& nodes) {
  const int m = static_cast<int>(nodes.size());
  if (m == 0) throw std::invalid_argument("divided_difference_exp: no nodes");
  if (m == 1) return std::exp(nodes[0]);

  // Shift so the largest node is 0, factor out exp(shift) at the end.
  double shift = *std::max_element(nodes.begin(), nodes.end());
  MatD z = MatD::Zero(m, m);
  double maxabs = 0.0;
  for (int i = 0; i < m; ++i) {
    z(i, i) = nodes[i] - shift;
    maxabs = std::max(maxabs, std::abs(z(i, i)));
    if (i + 1 < m) z(i, i + 1) = 1.0;
  }
  int squarings = 0;
  double norm = maxabs + 1.0;
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  MatD a = z / std::pow(2.0, squarings);
  MatD term = MatD::Identity(m, m);
  MatD expa = MatD::Identity(m, m);
  for (int k = 1; k <= 24; ++k) {
    term = term * a / static_cast<double>(k);
    expa += term;
  }
  for (int s = 0; s < squarings; ++s) expa = expa * expa;
  return expa(0, m - 1) * std::exp(shift);
}

double integral_exp_over_simplex(const std::vector<VecQ>& simplex_vertices,
                                 const std::vector<double>& vertex_values) {
  const int d = static_cast<int>(simplex_vertices.size()) - 1;
  if (d < 1) throw std::invalid_argument("integral_exp_over_simplex: need at least 2 vertices");
  if (vertex_values.size() != simplex_vertices.size())
    throw std::invalid_argument("integral_exp_over_simplex: value count mismatch");
  MatQ edges(d, d);
  for (int j = 0; j < d; ++j) edges.col(j) = simplex_vertices[j + 1] - simplex_vertices[0];
  double det = exact_det(edges).abs().to_double();
  if (det == 0.0) return 0.0;
  return det * divided_difference_exp(vertex_values);
}

}  // namespace coverineq
