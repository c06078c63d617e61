#include "coverineq/constants.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace coverineq::constant_table {

namespace {
std::mutex table_mutex;
std::vector<mpz_class>& table() {
  static std::vector<mpz_class> t{1};  // 0! = 1
  return t;
}
}  // namespace

mpz_class factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  if (n > 4000) throw std::invalid_argument("factorial: argument too large");
  std::lock_guard<std::mutex> lock(table_mutex);
  auto& t = table();
  while (static_cast<int>(t.size()) <= n) t.push_back(t.back() * static_cast<long>(t.size()));
  return t[n];
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class num = factorial(n);
  return num / (factorial(k) * factorial(n - k));
}

Rational factorial_q(int n) { return Rational(mpq_class(factorial(n))); }

Rational binomial_q(int n, int k) { return Rational(mpq_class(binomial(n, k))); }

}  // namespace coverineq::constant_table
