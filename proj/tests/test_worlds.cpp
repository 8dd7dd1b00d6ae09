#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperfield/errors.hpp"
#include "hyperfield/monads.hpp"
#include "hyperfield/worlds.hpp"
#include "support/gen.hpp"

using namespace hyperfield;

namespace {

Hyper rat(long p, long q = 1) { return Hyper::from_rational(Rational(p, q)); }

World random_world(testgen::Rng& rng) {
    return World(rng.hyper(), rng.positive_hyper());
}

bool witness_ok(const World& w, const Hyper& s) {
    return is_infinitesimal(s) != ww_contains(w, s);
}

}  // namespace

TEST_CASE("membership") {
    World unit(rat(0), rat(1));
    CHECK(ww_contains(unit, rat(1000000000)));
    CHECK_FALSE(ww_contains(unit, Hyper::omega()));
    World fine(Hyper::omega(), Hyper::eps());
    CHECK(ww_contains(fine, Hyper::omega() + rat(5) * Hyper::eps()));
    CHECK_THROWS_AS(World(rat(0), rat(0)), PreconditionViolated);
}

TEST_CASE("relation of two worlds") {
    World unit(rat(0), rat(1));
    CHECK(ww_relation(unit, World(rat(5), rat(3))) == WorldRelation::Same);
    CHECK(ww_relation(unit, World(Hyper::omega(), rat(1))) == WorldRelation::Disjoint);
    CHECK(ww_relation(unit, World(rat(0), Hyper::eps())) ==
          WorldRelation::SecondInsideFirst);
}

TEST_CASE("step situations") {
    Hyper e = Hyper::eps(), w = Hyper::omega();
    CHECK(step_situation(rat(1), e) == StepSituation::FiniteOverInfinitesimal);
    CHECK(step_situation(w, e) == StepSituation::InfiniteOverInfinitesimal);
    CHECK(step_situation(e, e * e) == StepSituation::BothInfinitesimal);
    CHECK(step_situation(rat(2), rat(1)) == StepSituation::BothFinite);
    CHECK(step_situation(w, rat(1)) == StepSituation::InfiniteOverFinite);
    CHECK(step_situation(w * w, w) == StepSituation::BothInfinite);
    CHECK_THROWS_AS(step_situation(rat(1), rat(2)), PreconditionViolated);
    CHECK_THROWS_AS(step_situation(rat(1), rat(0)), PreconditionViolated);
}

TEST_CASE("map to the unit world") {
    World fine(Hyper::omega(), Hyper::eps());
    CHECK(ww_map_to_unit(fine, Hyper::omega() + rat(3) * Hyper::eps()) == rat(3));
    testgen::Rng rng;
    for (int i = 0; i < 50; ++i) {
        World w = random_world(rng);
        CHECK(ww_map_to_unit(w, w.center).is_zero());
        // monotone on members
        Hyper s1 = w.center + w.step * rng.hyper();
        Hyper s2 = w.center + w.step * rng.hyper();
        if (!ww_contains(w, s1) || !ww_contains(w, s2)) continue;
        CHECK(compare(ww_map_to_unit(w, s1), ww_map_to_unit(w, s2)) == compare(s1, s2));
    }
    CHECK_THROWS_AS(ww_map_to_unit(World(rat(0), rat(1)), Hyper::omega()), NotMember);
}

TEST_CASE("nesting checks") {
    World a(rat(0), rat(1)), b(rat(0), Hyper::eps()), c(rat(0), Hyper::eps() * Hyper::eps());
    CHECK(is_nesting({a, b, c}, 21));
    CHECK(is_nesting({a, World(Hyper::omega(), rat(1))}, 21));
    CHECK(is_nesting({a, World(rat(5), rat(2))}, 21));
}

TEST_CASE("nested chains have strictly decreasing worlds") {
    World unit(rat(0), rat(1));
    auto chain = nested_chain(unit, 3);
    REQUIRE(chain.size() == 4);
    Hyper e = Hyper::eps();
    CHECK(chain[1].step == e);
    CHECK(chain[2].step == e * e);
    CHECK(chain[3].step == e * e * e);
    for (int i = 0; i < 3; ++i)
        CHECK(ww_relation(chain[i + 1], chain[i]) == WorldRelation::FirstInsideSecond);
    for (int k = -10; k <= 10; ++k)
        CHECK(ww_contains(chain[0], chain[3].center + chain[3].step * rat(k)));
}

TEST_CASE("monad/world witnesses") {
    World unit(rat(0), rat(1));
    CHECK(monad_world_witness(unit) == rat(1));
    World tiny(rat(0), Hyper::eps());
    Hyper w1 = monad_world_witness(tiny);
    CHECK(w1 == Hyper::monomial(Rational(-1, 2)));
    CHECK(witness_ok(tiny, w1));
    World far(Hyper::omega(), rat(1));
    CHECK(monad_world_witness(far).is_zero());

    testgen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        World w = random_world(rng);
        CHECK(witness_ok(w, monad_world_witness(w)));
        // and some element always lies outside the world
        CHECK_FALSE(ww_contains(w, w.center + w.step * Hyper::omega()));
    }
}

TEST_CASE("walking re-centers the same world") {
    testgen::Rng rng;
    for (int i = 0; i < 50; ++i) {
        World w = random_world(rng);
        Hyper s = w.center + w.step * rng.hyper();
        if (!ww_contains(w, s)) continue;
        CHECK(ww_relation(World(s, w.step), w) == WorldRelation::Same);
    }
}

TEST_CASE("step scaling by a natural number keeps the world") {
    testgen::Rng rng;
    for (int i = 0; i < 50; ++i) {
        Hyper t = rng.hyper(), u = rng.positive_hyper();
        int m = rng.range(1, 10);
        CHECK(ww_relation(World(t, u), World(t, u * rat(m))) == WorldRelation::Same);
    }
}

TEST_CASE("relation symmetry") {
    testgen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        World a = random_world(rng), b = random_world(rng);
        WorldRelation ab = ww_relation(a, b), ba = ww_relation(b, a);
        switch (ab) {
            case WorldRelation::Same: CHECK(ba == WorldRelation::Same); break;
            case WorldRelation::Disjoint: CHECK(ba == WorldRelation::Disjoint); break;
            case WorldRelation::FirstInsideSecond:
                CHECK(ba == WorldRelation::SecondInsideFirst);
                break;
            case WorldRelation::SecondInsideFirst:
                CHECK(ba == WorldRelation::FirstInsideSecond);
                break;
        }
    }
}

TEST_CASE("membership consistency with the relation") {
    testgen::Rng rng;
    for (int i = 0; i < 60; ++i) {
        World a = random_world(rng), b = random_world(rng);
        WorldRelation r = ww_relation(a, b);
        for (int k = -10; k <= 10; ++k) {
            if (r == WorldRelation::SecondInsideFirst)
                CHECK(ww_contains(a, b.center + b.step * rat(k)));
            if (r == WorldRelation::Disjoint) {
                CHECK_FALSE(ww_contains(a, b.center + b.step * rat(k)));
                CHECK_FALSE(ww_contains(b, a.center + a.step * rat(k)));
            }
        }
    }
}

TEST_CASE("restricted to constants there is a single world") {
    testgen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Hyper t = Hyper::from_rational(rng.rational());
        Hyper u = Hyper::from_rational(rng.nonzero_rational());
        if (u.sign() == Sign::Negative) u = -u;
        Hyper s = Hyper::from_rational(rng.rational());
        CHECK(ww_contains(World(t, u), s));
    }
}

TEST_CASE("every element is covered by its own unit world") {
    testgen::Rng rng;
    for (int i = 0; i < 100; ++i) {
        Hyper x = rng.hyper();
        CHECK(ww_contains(World(x, rat(1)), x));
    }
}
