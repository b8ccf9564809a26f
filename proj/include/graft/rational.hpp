#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace graft {

// Exact arithmetic everywhere: arbitrary-precision integers for counts and
// dimensions, rationals (always normalized, positive denominator) for matrix
// entries.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

} // namespace graft
