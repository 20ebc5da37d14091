#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace lipcoh {

// Arbitrary-precision integers and rationals.  Staircase counts and Smith
// pivots overflow fixed-width types, so every coefficient in the library is
// an Int; geometry (generic points, simplex vertices) uses Rat.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int sign_of(const Rat& x) { return x.sign(); }
inline int sign_of(const Int& x) { return x.sign(); }

} // namespace lipcoh
