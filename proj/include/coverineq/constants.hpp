#pragma once

#include <gmpxx.h>

#include "coverineq/rational.hpp"

namespace coverineq {

// Exact factorials and binomial coefficients, memoized behind a lock.
namespace constant_table {

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

Rational factorial_q(int n);
Rational binomial_q(int n, int k);

}  // namespace constant_table

}  // namespace coverineq
