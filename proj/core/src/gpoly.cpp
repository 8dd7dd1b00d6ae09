#include "hyperfield/gpoly.hpp"

#include <algorithm>
#include <map>

#include "hyperfield/errors.hpp"

namespace hyperfield {

GPoly::GPoly(std::vector<Term> terms) {
    std::map<Rational, Rational> acc;
    for (auto& t : terms) acc[t.exp] += t.coef;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) terms_.push_back({it->first, it->second});
}

GPoly GPoly::constant(const Rational& c) {
    GPoly p;
    if (c != 0) p.terms_.push_back({0, c});
    return p;
}

GPoly GPoly::monomial(const Rational& exp, const Rational& coef) {
    GPoly p;
    if (coef != 0) p.terms_.push_back({exp, coef});
    return p;
}

const Term& GPoly::leading() const {
    if (terms_.empty()) throw ZeroPolynomial();
    return terms_.front();
}

GPoly GPoly::operator+(const GPoly& rhs) const {
    // merge of two descending term lists
    GPoly out;
    auto a = terms_.begin(), b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && a->exp > b->exp)) {
            out.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->exp > a->exp) {
            out.terms_.push_back(*b++);
        } else {
            Rational c = a->coef + b->coef;
            if (c != 0) out.terms_.push_back({a->exp, c});
            ++a;
            ++b;
        }
    }
    return out;
}

GPoly GPoly::operator-() const {
    GPoly out;
    out.terms_.reserve(terms_.size());
    for (auto& t : terms_) out.terms_.push_back({t.exp, -t.coef});
    return out;
}

GPoly GPoly::operator-(const GPoly& rhs) const { return *this + (-rhs); }

GPoly GPoly::operator*(const GPoly& rhs) const {
    std::map<Rational, Rational> acc;
    for (auto& a : terms_)
        for (auto& b : rhs.terms_) acc[a.exp + b.exp] += a.coef * b.coef;
    GPoly out;
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (it->second != 0) out.terms_.push_back({it->first, it->second});
    return out;
}

GPoly GPoly::scaled(const Rational& c) const {
    GPoly out;
    if (c == 0) return out;
    out.terms_.reserve(terms_.size());
    for (auto& t : terms_) out.terms_.push_back({t.exp, t.coef * c});
    return out;
}

Rational GPoly::eval(const Int& n, const Int& d) const {
    if (n < 1) throw PreconditionViolated("eval requires n >= 1");
    if (d < 1) throw PreconditionViolated("eval requires d >= 1");
    Rational sum = 0;
    for (auto& t : terms_) {
        Int p = numerator(t.exp) * d, q = denominator(t.exp);
        if (p % q != 0) throw NonIntegralExponent();
        sum += t.coef * rpow(n, p / q);
    }
    return sum;
}

Int GPoly::exponent_denominator() const {
    Int d = 1;
    for (auto& t : terms_) d = lcm_of(d, denominator(t.exp));
    return d;
}

Int GPoly::root_bound() const {
    if (terms_.empty()) throw ZeroPolynomial();
    // eval(n, d) is a Laurent polynomial in n with integer exponents and
    // the same coefficients, so the Cauchy bound 1 + max|c_i/c_lead|
    // dominates every positive real root.
    Rational lead = abs_of(terms_.front().coef);
    Rational m = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
        m = std::max(m, abs_of(terms_[i].coef));
    Int bound = ceil_of(Rational(1) + m / lead);
    return bound < 1 ? Int(1) : bound;
}

Rational GPoly::coefficient(const Rational& exp) const {
    for (auto& t : terms_) {
        if (t.exp == exp) return t.coef;
        if (t.exp < exp) break;
    }
    return 0;
}

}  // namespace hyperfield
