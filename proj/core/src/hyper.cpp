#include "hyperfield/hyper.hpp"

#include "hyperfield/errors.hpp"

namespace hyperfield {

Hyper::Hyper(GPoly num, GPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (den_.leading().coef < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Hyper Hyper::from_rational(const Rational& r) {
    return Hyper(GPoly::constant(r), GPoly::one());
}

Hyper Hyper::omega() { return Hyper(GPoly::omega(), GPoly::one()); }

Hyper Hyper::eps() { return Hyper(GPoly::one(), GPoly::omega()); }

Hyper Hyper::monomial(const Rational& exp, const Rational& coef) {
    // negative exponents go to the denominator
    if (exp >= 0 || coef == 0) return Hyper(GPoly::monomial(exp, coef), GPoly::one());
    return Hyper(GPoly::constant(coef), GPoly::monomial(-exp, 1));
}

Sign Hyper::sign() const {
    // den's leading coefficient is positive, so the eventual sign is the
    // sign of num's leading coefficient
    if (num_.is_zero()) return Sign::Zero;
    return num_.leading().coef > 0 ? Sign::Positive : Sign::Negative;
}

MagnitudeClass Hyper::classify() const {
    if (num_.is_zero()) return MagnitudeClass::Infinitesimal;
    Rational d = degree();
    if (d < 0) return MagnitudeClass::Infinitesimal;
    if (d == 0) return MagnitudeClass::Appreciable;
    return MagnitudeClass::InfinitelyLarge;
}

Rational Hyper::degree() const {
    return num_.leading().exp - den_.leading().exp;
}

Rational Hyper::standard_part() const {
    switch (classify()) {
        case MagnitudeClass::Infinitesimal:
            return 0;
        case MagnitudeClass::Appreciable:
            return num_.leading().coef / den_.leading().coef;
        case MagnitudeClass::InfinitelyLarge:
        default:
            throw NotFinite();
    }
}

Hyper Hyper::inv() const {
    if (num_.is_zero()) throw DivisionByZero();
    return Hyper(den_, num_);
}

Hyper Hyper::operator+(const Hyper& rhs) const {
    return Hyper(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Hyper Hyper::operator-(const Hyper& rhs) const {
    return Hyper(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Hyper Hyper::operator*(const Hyper& rhs) const {
    return Hyper(num_ * rhs.num_, den_ * rhs.den_);
}

Hyper Hyper::operator/(const Hyper& rhs) const { return *this * rhs.inv(); }

Hyper Hyper::operator-() const { return Hyper(-num_, den_); }

bool Hyper::operator==(const Hyper& rhs) const {
    return num_ * rhs.den_ == rhs.num_ * den_;
}

Sign compare(const Hyper& x, const Hyper& y) { return (x - y).sign(); }

Hyper abs_of(const Hyper& x) {
    return x.sign() == Sign::Negative ? -x : x;
}

bool oracle_agrees(const Hyper& x, const Hyper& y, int samples) {
    Hyper diff = x - y;
    Sign expected = diff.sign();
    Int d = lcm_of(diff.num().exponent_denominator(),
                   diff.den().exponent_denominator());
    Int start = diff.den().root_bound();
    if (!diff.num().is_zero()) {
        Int nb = diff.num().root_bound();
        if (nb > start) start = nb;
    }
    for (int i = 0; i < samples; ++i) {
        Int n = start + i;
        Rational value = diff.num().eval(n, d) / diff.den().eval(n, d);
        Sign s = value == 0 ? Sign::Zero
                            : (value > 0 ? Sign::Positive : Sign::Negative);
        if (s != expected) return false;
    }
    return true;
}

}  // namespace hyperfield
