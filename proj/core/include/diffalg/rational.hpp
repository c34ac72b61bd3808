#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace diffalg {

// Arbitrary-precision exact arithmetic. Rationals are kept in lowest terms
// with a positive denominator by the backend.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// True iff n is the square of an integer. Negative values never qualify.
bool is_perfect_square(const Integer& n);

/// True iff r is the square of a rational.
bool is_rational_square(const Rational& r);

/// Canonical decimal rendering, "n" or "n/d" with d > 1.
std::string to_string(const Rational& r);

}  // namespace diffalg
