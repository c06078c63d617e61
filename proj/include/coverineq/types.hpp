#pragma once

#include <Eigen/Core>
#include <Eigen/Dense>
#include <vector>

#include "coverineq/rational.hpp"

namespace coverineq {

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecQ = Vec<Rational>;
using MatQ = Mat<Rational>;
using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

inline VecD to_double(const VecQ& v) {
  VecD out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = v(i).to_double();
  return out;
}

inline VecQ to_rational(const VecD& v) {
  VecQ out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = Rational::from_double(v(i));
  return out;
}

inline VecQ vecq(std::initializer_list<Rational> xs) {
  VecQ v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

inline VecQ vecq_zero(int n) {
  VecQ v(n);
  for (int i = 0; i < n; ++i) v(i) = Rational(0);
  return v;
}

// Total order for use as map keys and for canonical vertex sorting.
inline bool lex_less(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

inline bool vec_eq(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

}  // namespace coverineq
