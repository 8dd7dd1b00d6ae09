#include "hyperfield/similarity.hpp"

#include "hyperfield/errors.hpp"

namespace hyperfield {

Hyper reciprocal_map(const Hyper& x) {
    if (!is_infinitely_large(x))
        throw DomainViolation("reciprocal_map requires an infinitely large input");
    return x.inv();
}

Hyper translated_reciprocal(const Hyper& t, const Hyper& t0, const Hyper& u) {
    if (compare(u, Hyper()) != Sign::Positive)
        throw DomainViolation("translated_reciprocal requires u > 0");
    if (compare(abs_of(t), u) == Sign::Negative)
        throw DomainViolation("translated_reciprocal requires |t| >= u");
    return t.inv() + t0;
}

IntervalCase interval_case(const Hyper& t0, const Hyper& u) {
    if (compare(u, Hyper()) != Sign::Positive)
        throw PreconditionViolated("interval_case requires u > 0");

    using M = MagnitudeClass;
    auto index = [](M m) {  // Appreciable, Infinitesimal, InfinitelyLarge
        switch (m) {
            case M::Appreciable: return 0;
            case M::Infinitesimal: return 1;
            default: return 2;
        }
    };
    int row = index(t0.classify()), col = index(u.classify());
    int case_id = 3 * row + col + 1;
    static const int outcome[9] = {1, 2, 3, 1, 2, 3, 4, 5, 6};

    Hyper radius = u.inv();
    Hyper lo = t0 - radius, hi = t0 + radius;

    // Every point of [lo, hi] between finite endpoints is finite; every
    // point beyond a same-signed infinite endpoint is infinite.
    bool subset = is_finite(lo) && is_finite(hi);
    bool contains_gal0 = is_infinitely_large(lo) && lo.sign() == Sign::Negative &&
                         is_infinitely_large(hi) && hi.sign() == Sign::Positive;
    bool disjoint = is_infinitely_large(lo) && is_infinitely_large(hi) &&
                    lo.sign() == hi.sign();

    return IntervalCase{case_id,
                        outcome[case_id - 1],
                        subset,
                        contains_gal0,
                        disjoint,
                        !disjoint,
                        (radius + radius).classify()};
}

std::vector<std::pair<Hyper, Hyper>> canonical_case_inputs() {
    Hyper one = Hyper::from_rational(1);
    Hyper e = Hyper::eps(), w = Hyper::omega();
    return {{one, one}, {one, e}, {one, w}, {e, one}, {e, e},
            {e, w},     {w, one}, {w, e},   {w, w}};
}

}  // namespace hyperfield
