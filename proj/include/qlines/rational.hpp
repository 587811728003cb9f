#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "qlines/errors.hpp"

namespace qlines {

// Exact rational scalar used for every weight and distance. Values are kept
// in lowest terms with a positive denominator by the backing type; nothing
// in this project ever rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "7", "-7" or "num/den" with a nonzero denominator.
Rational parse_rational(std::string_view text);

// Inverse of parse_rational: integers print bare, everything else as "num/den".
std::string format_rational(const Rational& r);

} // namespace qlines
