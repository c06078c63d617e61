#pragma once

#include <optional>
#include <vector>

#include "coverineq/types.hpp"

namespace coverineq {

// Exact linear algebra over Rational via fraction-preserving Gaussian
// elimination.  Matrices are small (dimension <= 8) throughout.

int exact_rank(MatQ a);

Rational exact_det(MatQ a);

// Solves the square system a*x = b; empty when a is singular.
std::optional<VecQ> solve_square(MatQ a, VecQ b);

// Greedily selects indices of vectors forming a basis of span(vectors).
std::vector<int> independent_subset(const std::vector<VecQ>& vectors);

// Coordinates t with v = sum_j t_j * basis[j]; empty when v is outside the
// span.  basis must be linearly independent.
std::optional<VecQ> coordinates_in_span(const std::vector<VecQ>& basis, const VecQ& v);

}  // namespace coverineq
