#pragma once

#include <gmpxx.h>

#include <string>

namespace jl {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" or "p/q", always in lowest terms.
std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& s);

Integer factorial(long n);
Integer binomial(long n, long k);  // 0 when k < 0 or k > n
Rational floor_q(const Rational& q);
Rational ceil_q(const Rational& q);

}  // namespace jl
