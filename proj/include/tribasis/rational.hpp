#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tribasis {

using Int = boost::multiprecision::mpz_int;

// Arbitrary-precision rational, kept in lowest terms with positive
// denominator.  All arithmetic in the library is exact; nothing is ever
// rounded to floating point except for presentation (rat_double).
//
// Note: the boost string constructor does not reduce its input, so rationals
// coming from text must go through parse_rat, which builds the value from a
// separately parsed numerator and denominator.
using Rat = boost::multiprecision::mpq_rational;

// Accepts "p", "-p", "p/q" or "-p/q" with decimal digits and q > 0.
// Returns nullopt on any other input.
std::optional<Rat> parse_rat(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

// Smallest integer >= q.
Int rat_ceil(const Rat& q);

double rat_double(const Rat& q);

} // namespace tribasis
