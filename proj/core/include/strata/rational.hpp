#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strata {

using Rational = mpq_class;

// Always "p/q", also for integers ("3/1" is printed as "3").
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

Rational factorial(int k);
Rational binomial(const Rational& top, int k);  // generalized, top may be negative
Rational double_factorial(int k);               // (2m+1)!!, with (-1)!! = 1

}  // namespace strata
