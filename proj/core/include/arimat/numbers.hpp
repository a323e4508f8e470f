#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arimat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor(a/b) for b != 0; truncation in C++ rounds toward zero, which is wrong
// for the [0, pivot) reductions used all over the normal-form code.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// representative of x mod 1 in [0, 1)
inline Rat mod1(const Rat& x) {
    return x - Rat(floor_rat(x));
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

} // namespace arimat
