#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jacobi_kit::symcore {

/// Arbitrary-precision integers and rationals. Bracket expansions blow up
/// coefficient sizes quickly, so fixed-width arithmetic is not an option:
/// an overflow would silently corrupt an "identically zero" verdict.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) {
    return boost::multiprecision::numerator(q);
}

inline Integer denominator(const Rational& q) {
    return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

/// "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace jacobi_kit::symcore
