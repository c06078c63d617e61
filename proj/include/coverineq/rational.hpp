#pragma once

#include <gmpxx.h>
#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace coverineq {

// Exact rational scalar. Wraps mpq_class behind plain value semantics so it
// can be used as an Eigen scalar (gmpxx expression templates do not mix well
// with Eigen's).  Always kept in canonical form.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  // Exact conversion; every finite double is a dyadic rational.
  static Rational from_double(double d);

  // Accepts "p/q", plain integers, and decimal strings such as "-0.25".
  static Rational parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // Canonical string: "p" when the denominator is 1, else "p/q".
  std::string str() const;
  // Always "p/q", as used in report serialization.
  std::string frac_str() const;

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational pow(long e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(v_ / o.v_));
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

private:
  mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.abs(); }

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace coverineq

namespace Eigen {
template <>
struct NumTraits<coverineq::Rational> {
  using Real = coverineq::Rational;
  using NonInteger = coverineq::Rational;
  using Nested = coverineq::Rational;
  using Literal = long;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static coverineq::Rational epsilon() { return coverineq::Rational(0); }
  static coverineq::Rational dummy_precision() { return coverineq::Rational(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen
