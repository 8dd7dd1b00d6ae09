#ifndef HYPERFIELD_GPOLY_HPP
#define HYPERFIELD_GPOLY_HPP

#include <utility>
#include <vector>

#include "hyperfield/rational.hpp"

namespace hyperfield {

struct Term {
    Rational exp;
    Rational coef;
    bool operator==(const Term&) const = default;
};

/// Generalized polynomial in w with rational exponents and rational
/// coefficients. Terms are kept sorted by strictly decreasing exponent
/// with no zero coefficients; the zero polynomial is the empty sequence.
class GPoly {
public:
    GPoly() = default;
    explicit GPoly(std::vector<Term> terms);  // normalizes

    static GPoly constant(const Rational& c);
    static GPoly one() { return constant(1); }
    static GPoly monomial(const Rational& exp, const Rational& coef);
    static GPoly omega() { return monomial(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Term of maximal exponent; throws ZeroPolynomial on 0.
    const Term& leading() const;

    GPoly operator+(const GPoly& rhs) const;
    GPoly operator-(const GPoly& rhs) const;
    GPoly operator*(const GPoly& rhs) const;
    GPoly operator-() const;
    GPoly scaled(const Rational& c) const;

    bool operator==(const GPoly&) const = default;

    // Exact value at w = n^d. Requires n >= 1 and every exponent times d
    // integral, so w^(p/q) evaluates to the integer power n^(dp/q).
    Rational eval(const Int& n, const Int& d) const;

    // lcm of the exponent denominators (1 for the zero polynomial).
    Int exponent_denominator() const;

    // N0 such that sign(eval(n, d)) equals the sign of the leading
    // coefficient for all n >= N0, with d = exponent_denominator().
    // Cauchy bound; not tight.
    Int root_bound() const;

    // Coefficient at the given exponent, 0 if absent.
    Rational coefficient(const Rational& exp) const;

private:
    std::vector<Term> terms_;
};

}  // namespace hyperfield

#endif
