#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hyperfield/errors.hpp"
#include "hyperfield/filters.hpp"
#include "support/gen.hpp"

using namespace hyperfield;

namespace {

FiniteVector vec(std::vector<long> vals) {
    FiniteVector x;
    for (long v : vals) x.values.push_back(v);
    return x;
}

FiniteVector random_vector(testgen::Rng& rng, int n) {
    FiniteVector x;
    for (int i = 0; i < n; ++i) x.values.push_back(rng.rational(5, 3));
    return x;
}

}  // namespace

TEST_CASE("filter axioms") {
    CHECK(is_filter(principal_filter(3, 0b001)));
    CHECK(is_ultrafilter(principal_filter(3, 0b001)));

    FiniteFilter whole{2, {0b11}};
    CHECK(is_filter(whole));
    CHECK_FALSE(is_ultrafilter(whole));

    FiniteFilter with_empty{2, {0b00, 0b01, 0b11}};
    CHECK_FALSE(is_filter(with_empty));

    FiniteFilter not_upward{2, {0b01}};
    CHECK_FALSE(is_filter(not_upward));

    FiniteFilter empty_family{2, {}};
    CHECK_FALSE(is_filter(empty_family));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_filters(1).size() == 1);
    CHECK(enumerate_ultrafilters(1).size() == 1);
    CHECK(enumerate_filters(2).size() == 3);
    CHECK(enumerate_ultrafilters(2).size() == 2);
    CHECK(enumerate_filters(3).size() == 7);
    CHECK(enumerate_ultrafilters(3).size() == 3);
    CHECK_THROWS_AS(enumerate_filters(5), BudgetExceeded);
}

TEST_CASE("every enumerated filter is principal") {
    for (int n = 1; n <= 3; ++n) {
        auto filters = enumerate_filters(n);
        for (auto& f : filters) {
            CHECK(is_filter(f));
            Mask gen = ~Mask(0);
            for (Mask s : f.family) gen &= s;
            CHECK(f == principal_filter(n, gen));
        }
        // output is deterministic and sorted
        CHECK(std::is_sorted(filters.begin(), filters.end()));
    }
}

TEST_CASE("the Frechet filter needs an infinite universe") {
    CHECK_THROWS_AS(frechet_filter(3), FrechetNeedsInfinite);
}

TEST_CASE("ideal correspondence round trips") {
    for (int n = 1; n <= 4; ++n) {
        for (auto& f : enumerate_filters(n)) {
            FiniteIdeal ideal = filter_to_ideal(f);
            CHECK(ideal_to_filter(ideal) == f);
        }
    }
    // extensional membership on N = 2
    FiniteIdeal at0 = filter_to_ideal(principal_filter(2, 0b01));
    CHECK(ideal_contains(at0, vec({0, 7})));
    CHECK(ideal_contains(at0, vec({0, 0})));
    CHECK_FALSE(ideal_contains(at0, vec({1, 0})));

    FiniteIdeal trivial = filter_to_ideal(FiniteFilter{2, {0b11}});
    CHECK(ideal_contains(trivial, vec({0, 0})));
    CHECK_FALSE(ideal_contains(trivial, vec({0, 1})));
}

TEST_CASE("constant embedding meets the ideal only at zero") {
    for (auto& f : enumerate_filters(3)) {
        FiniteIdeal ideal = filter_to_ideal(f);
        for (long r : {-2L, -1L, 1L, 2L}) CHECK_FALSE(ideal_contains(ideal, vec({r, r, r})));
        CHECK(ideal_contains(ideal, vec({0, 0, 0})));
    }
}

TEST_CASE("reduced power equality and order") {
    FiniteFilter at0 = principal_filter(2, 0b01);
    CHECK(rp_equal(at0, vec({1, 9}), vec({1, -5})));
    CHECK_FALSE(rp_equal(at0, vec({1, 9}), vec({2, 9})));

    FiniteFilter whole{2, {0b11}};
    CHECK_FALSE(rp_leq(whole, vec({0, 1}), vec({1, 0})));
    CHECK_FALSE(rp_leq(whole, vec({1, 0}), vec({0, 1})));

    testgen::Rng rng;
    for (auto& f : enumerate_filters(3)) {
        for (int i = 0; i < 20; ++i) {
            FiniteVector x = random_vector(rng, 3), y = random_vector(rng, 3),
                         z = random_vector(rng, 3);
            CHECK(rp_equal(f, x, x));
            CHECK(rp_equal(f, x, y) == rp_equal(f, y, x));
            if (rp_equal(f, x, y) && rp_equal(f, y, z)) CHECK(rp_equal(f, x, z));
            CHECK(rp_leq(f, x, x));
            if (rp_leq(f, x, y) && rp_leq(f, y, z)) CHECK(rp_leq(f, x, z));
            if (rp_leq(f, x, y) && rp_leq(f, y, x)) CHECK(rp_equal(f, x, y));
        }
    }
}

TEST_CASE("the quotient is a field exactly for ultrafilters") {
    for (int n = 1; n <= 3; ++n)
        for (auto& f : enumerate_filters(n))
            CHECK(quotient_is_field(f) == is_ultrafilter(f));
    // zero divisors in the non-field case
    FiniteFilter whole{2, {0b11}};
    CHECK_FALSE(quotient_is_field(whole));
    CHECK(quotient_is_field(principal_filter(3, 0b010)));
}

TEST_CASE("incomparable witnesses for non-ultrafilters") {
    FiniteFilter whole{2, {0b11}};
    auto [x, y] = incomparable_witness(whole);
    CHECK(x.values == std::vector<Rational>{1, 0});
    CHECK(y.values == std::vector<Rational>{0, 1});

    int non_ultra = 0;
    for (auto& f : enumerate_filters(3)) {
        if (is_ultrafilter(f)) {
            CHECK_THROWS_AS(incomparable_witness(f), IsUltrafilter);
            continue;
        }
        ++non_ultra;
        auto [a, b] = incomparable_witness(f);
        CHECK_FALSE(rp_leq(f, a, b));
        CHECK_FALSE(rp_leq(f, b, a));
    }
    CHECK(non_ultra == 4);
}

TEST_CASE("ultrafilters order every pair") {
    testgen::Rng rng;
    for (auto& u : enumerate_ultrafilters(3)) {
        for (int i = 0; i < 100; ++i) {
            FiniteVector x = random_vector(rng, 3), y = random_vector(rng, 3);
            CHECK((rp_leq(u, x, y) || rp_leq(u, y, x)));
        }
    }
}
