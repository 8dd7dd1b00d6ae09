#ifndef HYPERFIELD_FILTERS_HPP
#define HYPERFIELD_FILTERS_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "hyperfield/rational.hpp"

namespace hyperfield {

// Subsets of the universe {0..N-1} are N-bit masks.
using Mask = std::uint32_t;

/// Set family over a finite index universe; a filter when nonempty,
/// empty-set-free, intersection-closed, and upward closed.
struct FiniteFilter {
    int universe_size;
    std::set<Mask> family;

    bool operator==(const FiniteFilter&) const = default;
    bool operator<(const FiniteFilter& rhs) const {
        return family < rhs.family;
    }
};

/// A function {0..N-1} -> Q.
struct FiniteVector {
    std::vector<Rational> values;

    Mask zero_set() const;
};

/// Ideal of the power algebra, represented by its zero-set family (which
/// is a filter under the ideal/filter correspondence).
struct FiniteIdeal {
    int universe_size;
    std::set<Mask> zero_set_family;
};

bool is_filter(const FiniteFilter& f);
bool is_ultrafilter(const FiniteFilter& f);

// Exhaustive enumeration; every filter on a finite set is principal, so
// there are 2^N - 1 filters and N ultrafilters. N <= 4.
std::vector<FiniteFilter> enumerate_filters(int n);
std::vector<FiniteFilter> enumerate_ultrafilters(int n);

FiniteFilter principal_filter(int n, Mask generator);

// The cofinite filter does not exist on a finite universe; always throws.
FiniteFilter frechet_filter(int n);

FiniteIdeal filter_to_ideal(const FiniteFilter& f);
FiniteFilter ideal_to_filter(const FiniteIdeal& ideal);

// Membership predicate of the ideal: Z(x) belongs to the zero-set family.
bool ideal_contains(const FiniteIdeal& ideal, const FiniteVector& x);

// Agreement/dominance on a member of the filter.
bool rp_equal(const FiniteFilter& f, const FiniteVector& x, const FiniteVector& y);
bool rp_leq(const FiniteFilter& f, const FiniteVector& x, const FiniteVector& y);

// True iff every vector whose zero set is outside the filter is
// invertible modulo the filter equivalence; coincides with
// is_ultrafilter by the maximal-ideal correspondence.
bool quotient_is_field(const FiniteFilter& f);

// For a non-ultrafilter, a pair incomparable under rp_leq.
std::pair<FiniteVector, FiniteVector> incomparable_witness(const FiniteFilter& f);

}  // namespace hyperfield

#endif
