#include "hyperfield/monads.hpp"

namespace hyperfield {

bool same_monad(const Hyper& x, const Hyper& y) {
    return is_infinitesimal(x - y);
}

bool same_galaxy(const Hyper& x, const Hyper& y) {
    return is_finite(x - y);
}

Decomposition decompose(const Hyper& x) {
    // Long division of num by den. Quotient exponents are differences of
    // leading exponents, all in (1/d)Z for the common denominator d of the
    // exponents involved, and strictly decrease, so the loop terminates
    // once the remainder's degree drops below the divisor's.
    GPoly rem = x.num();
    const GPoly& den = x.den();
    GPoly quotient;
    while (!rem.is_zero() && rem.leading().exp >= den.leading().exp) {
        Rational qe = rem.leading().exp - den.leading().exp;
        Rational qc = rem.leading().coef / den.leading().coef;
        GPoly q = GPoly::monomial(qe, qc);
        quotient = quotient + q;
        rem = rem - q * den;
    }
    std::vector<Term> infinite;
    Rational standard = 0;
    std::vector<Term> small;
    for (auto& t : quotient.terms()) {
        if (t.exp > 0)
            infinite.push_back(t);
        else if (t.exp == 0)
            standard = t.coef;
        else
            small.push_back(t);  // unreachable: quotient exponents are >= 0
    }
    Hyper tail = Hyper(rem, den) + Hyper(GPoly(std::move(small)), GPoly::one());
    return {Hyper(GPoly(std::move(infinite)), GPoly::one()), standard, tail};
}

}  // namespace hyperfield
