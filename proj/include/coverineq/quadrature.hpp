#pragma once

#include <functional>
#include <vector>

#include "coverineq/types.hpp"

namespace coverineq {

// Adaptive Simpson on [a, b] with absolute/relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

// Divided difference of exp at the given nodes, computed through the matrix
// exponential of the Opitz bidiagonal matrix; stable for coincident nodes.
double divided_difference_exp(const std::vector<double>& nodes);

// Integral of exp(l(x)) over the simplex with the given rational vertices,
// where l has exact values t_i at the vertices: equals |det| * dd_exp(t).
double integral_exp_over_simplex(const std::vector<VecQ>& simplex_vertices,
                                 const std::vector<double>& vertex_values);

}  // namespace coverineq
