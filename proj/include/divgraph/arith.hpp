#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace divgraph {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in lowest terms; d must be nonzero. mpq_class(n, d) alone is not
/// reduced.
Rational fraction(const Integer& n, const Integer& d);

/// Parses "p", "-p" or "p/q" (q > 0 after sign handling). Result is reduced.
/// Throws Error(ParseError) on anything else; no floating point literals.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// floor(a / b) for b != 0.
Integer floor_div(const Rational& a, const Rational& b);

/// Exponent text used inside labels: "3" or "(1/2)"; negative fractions
/// become "(-1/2)".
std::string format_exponent(const Rational& exponent);

/// Prime factors of |n| with multiplicity, ascending. n must be nonzero.
std::vector<Integer> prime_factors(const Integer& n);

bool is_prime(const Integer& n);

/// Positive divisors of |n|, ascending. n must be nonzero.
std::vector<Integer> positive_divisors(const Integer& n);

std::string_view trim(std::string_view text);

}  // namespace divgraph
