#pragma once

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace piforge {

/// Exact rational scalar used for dimension exponents and nullspace algebra.
using Rat = boost::rational<long long>;

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);

/// Parses "p", "-p" or "p/q". Throws DataError on anything else (including
/// floating-point literals, which would break exactness).
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& r);

/// Smallest integer vector on the same ray: clears denominators, divides by
/// the gcd and flips sign so the first nonzero entry is positive.
/// The zero vector maps to itself.
std::vector<long long> primitive_integer(const std::vector<Rat>& v);

} // namespace piforge
