#ifndef HYPERFIELD_RATIONAL_HPP
#define HYPERFIELD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "hyperfield/errors.hpp"

namespace hyperfield {

using Int = boost::multiprecision::cpp_int;
// Always kept in lowest terms with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// Smallest integer >= r.
inline Int ceil_of(const Rational& r) {
    Int p = numerator(r), q = denominator(r);
    return p >= 0 ? Int((p + q - 1) / q) : Int(-((-p) / q));
}

// n^e for e >= 0.
inline Int ipow(const Int& n, const Int& e) {
    Int result(1), base(n), k(e);
    while (k > 0) {
        if (bit_test(k, 0)) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

// n^e for any integer e; n must be nonzero when e < 0.
inline Rational rpow(const Int& n, const Int& e) {
    if (e >= 0) return Rational(ipow(n, e));
    if (n == 0) throw DivisionByZero();
    return Rational(Int(1), ipow(n, -e));
}

inline std::string to_string(const Rational& r) { return r.str(); }

inline Int lcm_of(const Int& a, const Int& b) {
    return a / gcd(a, b) * b;
}

}  // namespace hyperfield

#endif
