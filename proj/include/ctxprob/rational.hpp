#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ctxprob {

// Exact arithmetic throughout the classical pipeline. cpp_rational keeps values
// normalized (lowest terms, positive denominator), which the "p/q" wire format relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Whitespace is not accepted; q must be nonzero.
// Throws ParseError.
Rational parse_rational(std::string_view text);

// Lowest-terms "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

}  // namespace ctxprob
