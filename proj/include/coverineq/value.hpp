#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coverineq/rational.hpp"

namespace coverineq {

// A quantity that is either an exact rational or a double approximation.
// Arithmetic keeps exactness when every operand is exact, which is what the
// inequality reports use to decide whether a comparison is certified.
class Value {
public:
  Value() : exact_(true), q_(0), d_(0.0) {}

  static Value exact(Rational q) {
    Value v;
    v.exact_ = true;
    v.d_ = q.to_double();
    v.q_ = std::move(q);
    return v;
  }
  static Value approx(double d) {
    Value v;
    v.exact_ = false;
    v.q_ = Rational(0);
    v.d_ = d;
    return v;
  }
  static Value infinite() { return approx(std::numeric_limits<double>::infinity()); }

  bool is_exact() const { return exact_; }
  bool is_finite() const { return std::isfinite(d_); }
  double to_double() const { return d_; }
  const Rational& rational() const {
    if (!exact_) throw std::logic_error("Value: rational() on an approximate value");
    return q_;
  }

  Value operator*(const Value& o) const {
    if (exact_ && o.exact_) return exact(q_ * o.q_);
    return approx(d_ * o.d_);
  }
  Value operator/(const Value& o) const {
    if (exact_ && o.exact_) {
      if (o.q_.is_zero()) return infinite();
      return exact(q_ / o.q_);
    }
    return approx(d_ / o.d_);
  }
  Value operator+(const Value& o) const {
    if (exact_ && o.exact_) return exact(q_ + o.q_);
    return approx(d_ + o.d_);
  }
  Value pow(long e) const {
    if (exact_) return exact(q_.pow(e));
    return approx(std::pow(d_, static_cast<double>(e)));
  }

  friend Value operator*(const Rational& q, const Value& v) { return exact(q) * v; }

  // lhs/rhs comparison used by every report: certified when both sides are
  // exact, tolerance-based otherwise.
  static bool at_least(const Value& lhs, const Value& rhs, double tolerance) {
    if (lhs.exact_ && rhs.exact_) return lhs.q_ >= rhs.q_;
    if (!std::isfinite(lhs.d_)) return lhs.d_ > 0;
    return lhs.d_ >= rhs.d_ * (1.0 - tolerance);
  }

private:
  bool exact_;
  Rational q_;
  double d_;
};

}  // namespace coverineq
