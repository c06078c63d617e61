#include "coverineq/rational.hpp"

#include <cmath>
#include <ostream>

namespace coverineq {

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("Rational::from_double: non-finite");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);
  return Rational(std::move(q));
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad fraction '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpz_class n;
    if (n.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
    return Rational(mpq_class(n));
  }
  // Decimal: digits before and after the dot, scaled by a power of ten.
  std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
  bool neg = false;
  if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
    neg = head[0] == '-';
    head = head.substr(1);
  }
  if (head.empty() && tail.empty()) throw std::invalid_argument("Rational::parse: bad decimal '" + s + "'");
  for (char c : head + tail)
    if (c < '0' || c > '9') throw std::invalid_argument("Rational::parse: bad decimal '" + s + "'");
  mpz_class digits;
  if (digits.set_str(head + tail, 10) != 0) throw std::invalid_argument("Rational::parse: bad decimal '" + s + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
  mpq_class q(digits, scale);
  q.canonicalize();
  if (neg) q = -q;
  return Rational(std::move(q));
}

std::string Rational::str() const {
  return v_.get_str();
}

std::string Rational::frac_str() const {
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  mpq_class r(n, d);
  r.canonicalize();
  Rational out(std::move(r));
  return invert ? out.inv() : out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.str();
}

}  // namespace coverineq
