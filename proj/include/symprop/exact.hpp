#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace symprop {

// All exact arithmetic in this library runs on arbitrary-precision integers
// and rationals. cpp_rational keeps every value canonical: lowest terms,
// denominator > 0. Equality of proportions is therefore structural.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds num/den as a canonical rational. Throws std::invalid_argument if
/// den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Canonical "num/den" form, lowest terms, positive denominator.
/// Zero renders as "0/1".
std::string fraction_string(const Rational& value);

/// Inverse of fraction_string. Accepts an optional leading '-' on the
/// numerator. Throws std::invalid_argument on malformed input or zero
/// denominator.
Rational parse_fraction(std::string_view text);

/// Exact decimal rendering with round-half-even at `significant_digits`
/// significant digits, formatted like printf %g: fixed notation when the
/// decimal exponent lies in [-4, significant_digits), scientific otherwise,
/// trailing zeros stripped. Never goes through floating point.
std::string decimal_string(const Rational& value, int significant_digits = 15);

/// Natural log of a positive big integer, accurate to ~1e-13 absolute.
/// Throws std::domain_error for z <= 0.
double log_bigint(const BigInt& z);

/// Natural log of a positive rational. Throws std::domain_error for q <= 0.
double log_rational(const Rational& q);

}  // namespace symprop
