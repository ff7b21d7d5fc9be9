// Exact arbitrary-precision arithmetic used throughout the library.
//
// Everything downstream (LP tableaus, polyhedron vertices, homology ranks)
// relies on these being exact: no floating point appears anywhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace rp {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // lowest terms, denominator > 0

inline Integer numeratorOf(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominatorOf(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool isIntegral(const Rational& r) { return denominatorOf(r) == 1; }

/// Largest integer <= r.
inline Integer ratFloor(const Rational& r) {
    Integer q = numeratorOf(r) / denominatorOf(r);  // truncates toward zero
    if (r < 0 && q * denominatorOf(r) != numeratorOf(r)) --q;
    return q;
}

/// Smallest integer >= r.
inline Integer ratCeil(const Rational& r) {
    Integer q = numeratorOf(r) / denominatorOf(r);
    if (r > 0 && q * denominatorOf(r) != numeratorOf(r)) ++q;
    return q;
}

inline Integer intLcm(const Integer& a, const Integer& b) {
    using boost::multiprecision::gcd;
    if (a == 0 || b == 0) return 0;
    Integer g = gcd(a, b);
    Integer l = (a / g) * b;
    return l < 0 ? Integer(-l) : l;
}

inline std::string toString(const Rational& r) {
    std::ostringstream os;
    if (isIntegral(r)) {
        os << numeratorOf(r);
    } else {
        os << numeratorOf(r) << '/' << denominatorOf(r);
    }
    return os.str();
}

}  // namespace rp
