#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fairdiv {

/// Exact arbitrary-precision rational. Every fractional quantity in this
/// library (shares, expected utilities, lottery probabilities) is a Rational;
/// there is no floating point in any solver or checker.
using Rational = mpq_class;
using BigInt = mpz_class;

/// num/den reduced to lowest terms with a positive denominator.
Rational make_rational(long num, long den = 1);

long rational_floor(const Rational& q);
long rational_ceil(const Rational& q);

bool is_integral(const Rational& q);

/// Canonical text form: "p/q" in lowest terms, "p" when the value is an
/// integer. Inverse of parse_rational.
std::string to_string(const Rational& q);

/// Accepts the forms produced by to_string. Anything else (floats, blanks,
/// zero denominators) raises std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const std::vector<Rational>& values);

}  // namespace fairdiv
