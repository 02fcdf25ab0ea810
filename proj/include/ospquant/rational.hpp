#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace ospq {

// Exact arbitrary-precision rational scalar: always in lowest terms with
// positive denominator (maintained by the backend on every operation).
using Rational = boost::multiprecision::mpq_rational;

// Parses "num/den" or a plain integer string. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(const std::string& s);

// "3", "-3/4" (integers without the denominator).
std::string rat_text(const Rational& x);

// Always "num/den", e.g. zero prints as "0/1".
std::string rat_frac(const Rational& x);

}  // namespace ospq
