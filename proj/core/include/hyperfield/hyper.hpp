#ifndef HYPERFIELD_HYPER_HPP
#define HYPERFIELD_HYPER_HPP

#include "hyperfield/gpoly.hpp"

namespace hyperfield {

enum class Sign { Negative, Zero, Positive };
enum class MagnitudeClass { Infinitesimal, Appreciable, InfinitelyLarge };

/// Element of the representable non-Archimedean field: a ratio of two
/// generalized polynomials in w. Kept unreduced; the denominator's leading
/// coefficient is normalized positive. Equality is by cross-multiplication.
class Hyper {
public:
    Hyper() : num_(), den_(GPoly::one()) {}
    Hyper(GPoly num, GPoly den);

    static Hyper from_rational(const Rational& r);
    static Hyper omega();
    static Hyper eps();
    static Hyper monomial(const Rational& exp, const Rational& coef = 1);

    const GPoly& num() const { return num_; }
    const GPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    Sign sign() const;
    MagnitudeClass classify() const;

    // Leading exponent of num minus leading exponent of den; pre: nonzero.
    Rational degree() const;

    // The unique rational infinitesimally close to *this.
    // Throws NotFinite when infinitely large.
    Rational standard_part() const;

    Hyper inv() const;  // throws DivisionByZero on 0

    Hyper operator+(const Hyper& rhs) const;
    Hyper operator-(const Hyper& rhs) const;
    Hyper operator*(const Hyper& rhs) const;
    Hyper operator/(const Hyper& rhs) const;
    Hyper operator-() const;

    bool operator==(const Hyper& rhs) const;

private:
    GPoly num_, den_;
};

// Sign of x - y; a total order compatible with the field operations.
Sign compare(const Hyper& x, const Hyper& y);

Hyper abs_of(const Hyper& x);

inline bool is_infinitesimal(const Hyper& x) {
    return x.classify() == MagnitudeClass::Infinitesimal;
}
inline bool is_infinitely_large(const Hyper& x) {
    return x.classify() == MagnitudeClass::InfinitelyLarge;
}
// "Finite" is inclusive: infinitesimals are finite.
inline bool is_finite(const Hyper& x) { return !is_infinitely_large(x); }

// Validation bridge to the index-set semantics: true iff at `samples`
// integer points beyond the root bounds of x - y, the pointwise sign of
// the difference equals compare(x, y).
bool oracle_agrees(const Hyper& x, const Hyper& y, int samples);

}  // namespace hyperfield

#endif
