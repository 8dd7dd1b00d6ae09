#include "hyperfield/limits.hpp"

#include <algorithm>

#include "hyperfield/errors.hpp"

namespace hyperfield {

namespace {

// num and den of x with exponents shifted to be nonnegative integers.
// Shifting multiplies both by the same power of w, so the ratio is
// unchanged at every n >= 1; positions where the original sequence was
// undefined stay undefined.
struct ClearedSeq {
    GPoly num, den;
};

ClearedSeq cleared(const Hyper& x) {
    if (x.num().exponent_denominator() != 1 || x.den().exponent_denominator() != 1)
        throw NonIntegralExponent();
    Rational low = 0;
    for (auto& t : x.num().terms()) low = std::min(low, t.exp);
    for (auto& t : x.den().terms()) low = std::min(low, t.exp);
    GPoly shift = GPoly::monomial(-low, 1);
    return {x.num() * shift, x.den() * shift};
}

// Value of an integer-exponent polynomial with exponents >= 0 at n >= 0.
Rational poly_at(const GPoly& p, const Int& n) {
    Rational sum = 0;
    for (auto& t : p.terms()) sum += t.coef * Rational(ipow(n, numerator(t.exp)));
    return sum;
}

std::optional<Rational> value_at(const ClearedSeq& s, const Int& n) {
    Rational d = poly_at(s.den, n);
    if (d == 0) return std::nullopt;
    return poly_at(s.num, n) / d;
}

void check_cancel(const CancelCheck& cancelled) {
    if (cancelled && cancelled()) throw Cancelled();
}

// smallest t with t^g >= v
Int int_root_up(const Int& v, const Int& g) {
    if (v <= 1) return v;
    Int lo = 1, hi = 1;
    while (ipow(hi, g) < v) hi *= 2;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (ipow(mid, g) < v)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

// First integer past which p keeps the sign of its leading coefficient.
// Fujiwara's bound 2 * max_k |c_{lead-k}/c_lead|^(1/k) is much tighter
// than the Cauchy bound when small coefficients sit near the top, which
// is the norm for the eps^2-scaled criterion polynomials; take the best
// of the two.
Int sign_start(const GPoly& p) {
    Int cauchy = p.root_bound();
    const Term& lead = p.leading();
    Int best = 1;
    for (auto& t : p.terms()) {
        if (t.exp == lead.exp) continue;
        Rational diff = lead.exp - t.exp;
        Int gap = numerator(diff);  // integer exponents
        Rational ratio = abs_of(t.coef / lead.coef);
        Int r = ceil_of(ratio);
        Int cand = 2 * int_root_up(r, gap);
        best = std::max(best, cand);
    }
    Int fuji = best + 1;
    return std::min(cauchy, fuji);
}

// d/dn of an integer-exponent polynomial.
GPoly derivative(const GPoly& p) {
    std::vector<Term> terms;
    for (auto& t : p.terms())
        if (t.exp != 0) terms.push_back({t.exp - 1, t.coef * t.exp});
    return GPoly(std::move(terms));
}

}  // namespace

LimitResult ns_limit(const Hyper& x) {
    if (x.num().exponent_denominator() != 1 || x.den().exponent_denominator() != 1)
        throw NonIntegralExponent();
    if (x.classify() != MagnitudeClass::InfinitelyLarge)
        return {LimitResult::Kind::Converges, x.standard_part()};
    return {x.sign() == Sign::Positive ? LimitResult::Kind::DivergesPlus
                                       : LimitResult::Kind::DivergesMinus,
            0};
}

std::optional<Rational> sequence_value(const Hyper& x, const Int& n) {
    return value_at(cleared(x), n);
}

Int epsilon_index(const Hyper& x, const Rational& L, const Rational& eps,
                  const CancelCheck& cancelled) {
    if (eps <= 0) throw EpsNotPositive();
    LimitResult lr = ns_limit(x);
    if (!lr.converges() || lr.limit != L) throw NotConvergentToL();

    ClearedSeq y = cleared(x - Hyper::from_rational(L));
    // Beyond the root bounds of num^2 - eps^2*den^2 and of den, the bound
    // holds: the difference is infinitesimal, so that polynomial has a
    // negative leading coefficient.
    GPoly crit = y.num * y.num - (y.den * y.den).scaled(eps * eps);
    Int start = sign_start(y.den);
    if (!crit.is_zero()) start = std::max(start, sign_start(crit));

    auto good = [&](const Int& n) {
        auto v = value_at(y, n);
        return v && abs_of(*v) <= eps;
    };
    Int m = start;
    for (Int n = start - 1; n >= 0; --n) {
        check_cancel(cancelled);
        if (!good(n)) break;
        m = n;
    }
    return m;
}

Int cauchy_index(const Hyper& x, const Rational& eps,
                 const CancelCheck& cancelled) {
    if (eps <= 0) throw EpsNotPositive();
    LimitResult lr = ns_limit(x);
    if (!lr.converges()) throw NotConvergentToL();
    const Rational& L = lr.limit;

    ClearedSeq s = cleared(x);
    // Beyond n1 the denominator is nonzero and the sequence is monotone
    // toward L (the derivative's numerator has constant sign), so the
    // closure of the tail values from any k >= n1 is the interval between
    // x(k) and L.
    GPoly dnum = derivative(s.num) * s.den - s.num * derivative(s.den);
    Int n1 = sign_start(s.den);
    if (!dnum.is_zero()) n1 = std::max(n1, sign_start(dnum));

    // For k >= n1 the tail spread is |x(k) - L|, which is nonincreasing,
    // so the minimal such k is the epsilon index (when it lies past n1).
    Int k0 = std::max(n1, epsilon_index(x, L, eps, cancelled));

    Rational hi = L, lo = L;
    if (auto v = value_at(s, k0)) {
        hi = std::max(hi, *v);
        lo = std::min(lo, *v);
    }
    Int best = k0;
    for (Int k = k0 - 1; k >= 0; --k) {
        check_cancel(cancelled);
        auto v = value_at(s, k);
        if (!v) break;
        hi = std::max(hi, *v);
        lo = std::min(lo, *v);
        if (hi - lo > eps) break;
        best = k;
    }
    return best;
}

}  // namespace hyperfield
