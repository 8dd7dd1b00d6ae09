#include "hyperfield/filters.hpp"

#include <algorithm>

#include "hyperfield/errors.hpp"

namespace hyperfield {

namespace {

Mask full_mask(int n) { return static_cast<Mask>((1u << n) - 1); }

void check_universe(int n) {
    if (n < 1 || n > 20)
        throw PreconditionViolated("universe size out of range");
}

}  // namespace

Mask FiniteVector::zero_set() const {
    Mask z = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == 0) z |= Mask(1) << i;
    return z;
}

bool is_filter(const FiniteFilter& f) {
    check_universe(f.universe_size);
    Mask full = full_mask(f.universe_size);
    if (f.family.empty()) return false;                      // (A1)
    if (f.family.count(0)) return false;                     // (A2)
    for (Mask a : f.family) {
        if (a & ~full) return false;
        for (Mask b : f.family)
            if (!f.family.count(a & b)) return false;        // (A3)
        for (Mask g = a; ; g = (g + 1) | a) {                // supersets of a
            if (!f.family.count(g)) return false;            // (A4)
            if (g == full) break;
        }
    }
    return true;
}

bool is_ultrafilter(const FiniteFilter& f) {
    if (!is_filter(f)) return false;
    Mask full = full_mask(f.universe_size);
    for (Mask s = 0; s <= full; ++s)                         // (A5)
        if (!f.family.count(s) && !f.family.count(full & ~s)) return false;
    return true;
}

FiniteFilter principal_filter(int n, Mask generator) {
    check_universe(n);
    Mask full = full_mask(n);
    if (generator == 0 || (generator & ~full))
        throw PreconditionViolated("principal generator must be a nonempty subset");
    FiniteFilter f{n, {}};
    for (Mask s = 0; s <= full; ++s)
        if ((s & generator) == generator) f.family.insert(s);
    return f;
}

std::vector<FiniteFilter> enumerate_filters(int n) {
    check_universe(n);
    if (n > 4) throw BudgetExceeded();
    // brute force over all set families; 2^(2^N) candidates for N <= 4
    Mask full = full_mask(n);
    int subsets = full + 1;
    std::vector<FiniteFilter> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << subsets); ++bits) {
        FiniteFilter f{n, {}};
        for (int s = 0; s < subsets; ++s)
            if (bits & (std::uint64_t(1) << s)) f.family.insert(Mask(s));
        if (is_filter(f)) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FiniteFilter> enumerate_ultrafilters(int n) {
    std::vector<FiniteFilter> out;
    for (auto& f : enumerate_filters(n))
        if (is_ultrafilter(f)) out.push_back(f);
    return out;
}

FiniteFilter frechet_filter(int n) {
    check_universe(n);
    // on a finite universe every complement is finite, so the family
    // would contain the empty set and violate (A2)
    throw FrechetNeedsInfinite();
}

FiniteIdeal filter_to_ideal(const FiniteFilter& f) {
    if (!is_filter(f)) throw NotAFilter();
    return FiniteIdeal{f.universe_size, f.family};
}

FiniteFilter ideal_to_filter(const FiniteIdeal& ideal) {
    FiniteFilter f{ideal.universe_size, ideal.zero_set_family};
    if (!is_filter(f)) throw NotAFilter();
    return f;
}

bool ideal_contains(const FiniteIdeal& ideal, const FiniteVector& x) {
    return ideal.zero_set_family.count(x.zero_set()) != 0;
}

namespace {

Mask agreement_set(const FiniteVector& x, const FiniteVector& y) {
    Mask a = 0;
    for (std::size_t i = 0; i < x.values.size(); ++i)
        if (x.values[i] == y.values[i]) a |= Mask(1) << i;
    return a;
}

Mask dominance_set(const FiniteVector& x, const FiniteVector& y) {
    Mask a = 0;
    for (std::size_t i = 0; i < x.values.size(); ++i)
        if (x.values[i] <= y.values[i]) a |= Mask(1) << i;
    return a;
}

void check_filter(const FiniteFilter& f) {
    if (!is_filter(f)) throw NotAFilter();
}

FiniteVector indicator(int n, Mask s) {
    FiniteVector v{std::vector<Rational>(n, 0)};
    for (int i = 0; i < n; ++i)
        if (s & (Mask(1) << i)) v.values[i] = 1;
    return v;
}

}  // namespace

bool rp_equal(const FiniteFilter& f, const FiniteVector& x, const FiniteVector& y) {
    check_filter(f);
    return f.family.count(agreement_set(x, y)) != 0;
}

bool rp_leq(const FiniteFilter& f, const FiniteVector& x, const FiniteVector& y) {
    check_filter(f);
    return f.family.count(dominance_set(x, y)) != 0;
}

bool quotient_is_field(const FiniteFilter& f) {
    check_filter(f);
    Mask full = full_mask(f.universe_size);
    // A coset of x is invertible iff x*y agrees with 1 on a filter member
    // for some y; the best attainable agreement set is the nonzero set of
    // x. Every zero-set pattern except the full one is realized by a
    // nonzero vector.
    for (Mask z = 0; z < full; ++z) {
        if (f.family.count(z)) continue;  // Z(x) in filter: x is 0 in the quotient
        if (!f.family.count(full & ~z)) return false;
    }
    return true;
}

std::pair<FiniteVector, FiniteVector> incomparable_witness(const FiniteFilter& f) {
    check_filter(f);
    Mask full = full_mask(f.universe_size);
    for (Mask a = 1; a < full; ++a) {
        if (f.family.count(a) || f.family.count(full & ~a)) continue;
        return {indicator(f.universe_size, a), indicator(f.universe_size, full & ~a)};
    }
    throw IsUltrafilter();
}

}  // namespace hyperfield
