#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace seqdens {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always kept in lowest terms with a positive
// denominator. All coordinates in this library are Rationals: every corner
// produced by the closed-form constructions is an affine combination with
// halves of input rationals, so the type is closed under everything we do.
using Rational = boost::multiprecision::cpp_rational;

// Parses "a" or "a/b" with optional leading sign on a; b must be a positive
// integer literal. Decimal and other notations are rejected.
Rational parse_rational(std::string_view text);

// "a/b", or just "a" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

// Decimal rendering with the given number of significant digits (round half
// away from zero); exact trailing zeros in the fraction part are dropped.
std::string to_decimal_string(const Rational& r, int significant_digits = 12);

BigInt floor_to_int(const Rational& r);
BigInt ceil_to_int(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace seqdens
