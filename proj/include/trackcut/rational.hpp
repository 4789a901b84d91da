#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace trackcut {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Exact "p/q" rendering; integers are written as "p/1".
std::string to_fraction_string(const Rational& value);

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_fraction(const std::string& text);

// Fractional part <a> = a - floor(a), always in [0, 1).
Rational fractional_part(const Rational& value);

Integer floor_of(const Rational& value);

bool is_integral(const Rational& value);

}  // namespace trackcut
