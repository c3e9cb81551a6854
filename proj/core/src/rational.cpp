#include "strata/rational.hpp"

#include <stdexcept>

namespace strata {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

Rational factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

Rational binomial(const Rational& top, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= (top - i);
  return r / factorial(k);
}

Rational double_factorial(int k) {
  mpz_class f = 1;
  for (int i = k; i > 1; i -= 2) f *= i;
  return Rational(f);
}

}  // namespace strata
