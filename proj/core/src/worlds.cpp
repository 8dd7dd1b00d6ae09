#include "hyperfield/worlds.hpp"

#include "hyperfield/errors.hpp"

namespace hyperfield {

World::World(Hyper c, Hyper s) : center(std::move(c)), step(std::move(s)) {
    if (compare(step, Hyper()) != Sign::Positive)
        throw PreconditionViolated("world step must be positive");
}

bool ww_contains(const World& w, const Hyper& s) {
    return is_finite((s - w.center) / w.step);
}

WorldRelation ww_relation(const World& w1, const World& w2) {
    Hyper offset = w1.center - w2.center;
    switch ((w1.step / w2.step).classify()) {
        case MagnitudeClass::Appreciable:
            return is_finite(offset / w1.step) ? WorldRelation::Same
                                               : WorldRelation::Disjoint;
        case MagnitudeClass::InfinitelyLarge:
            return is_finite(offset / w1.step) ? WorldRelation::SecondInsideFirst
                                               : WorldRelation::Disjoint;
        case MagnitudeClass::Infinitesimal:
        default:
            return is_finite(offset / w2.step) ? WorldRelation::FirstInsideSecond
                                               : WorldRelation::Disjoint;
    }
}

StepSituation step_situation(const Hyper& u, const Hyper& v) {
    if (compare(v, Hyper()) != Sign::Positive)
        throw PreconditionViolated("step_situation requires v > 0");
    if (compare(v, u) == Sign::Positive)
        throw PreconditionViolated("step_situation requires v <= u");
    MagnitudeClass cu = u.classify(), cv = v.classify();
    using M = MagnitudeClass;
    if (cu == M::Infinitesimal && cv == M::Infinitesimal)
        return StepSituation::BothInfinitesimal;
    if (cu == M::Appreciable && cv == M::Infinitesimal)
        return StepSituation::FiniteOverInfinitesimal;
    if (cu == M::Appreciable && cv == M::Appreciable)
        return StepSituation::BothFinite;
    if (cu == M::InfinitelyLarge && cv == M::Infinitesimal)
        return StepSituation::InfiniteOverInfinitesimal;
    if (cu == M::InfinitelyLarge && cv == M::Appreciable)
        return StepSituation::InfiniteOverFinite;
    if (cu == M::InfinitelyLarge && cv == M::InfinitelyLarge)
        return StepSituation::BothInfinite;
    // v <= u excludes the remaining combinations
    throw PreconditionViolated("step classes inconsistent with v <= u");
}

Hyper ww_map_to_unit(const World& w, const Hyper& s) {
    if (!ww_contains(w, s)) throw NotMember();
    return (s - w.center) / w.step;
}

namespace {

std::vector<Hyper> probe_points(const World& w, int probes) {
    int half = probes / 2;
    std::vector<Hyper> out;
    out.reserve(2 * half + 1);
    for (int k = -half; k <= half; ++k)
        out.push_back(w.center + w.step * Hyper::from_rational(k));
    return out;
}

}  // namespace

bool is_nesting(const std::vector<World>& family, int probes) {
    if (family.empty())
        throw PreconditionViolated("is_nesting requires a nonempty family");
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const World &a = family[i], &b = family[j];
            switch (ww_relation(a, b)) {
                case WorldRelation::Disjoint:
                    for (auto& p : probe_points(a, probes))
                        if (ww_contains(b, p)) return false;
                    for (auto& p : probe_points(b, probes))
                        if (ww_contains(a, p)) return false;
                    break;
                case WorldRelation::Same:
                    for (auto& p : probe_points(a, probes))
                        if (!ww_contains(b, p)) return false;
                    for (auto& p : probe_points(b, probes))
                        if (!ww_contains(a, p)) return false;
                    break;
                case WorldRelation::FirstInsideSecond:
                    for (auto& p : probe_points(a, probes))
                        if (!ww_contains(b, p)) return false;
                    break;
                case WorldRelation::SecondInsideFirst:
                    for (auto& p : probe_points(b, probes))
                        if (!ww_contains(a, p)) return false;
                    break;
            }
        }
    }
    return true;
}

std::vector<World> nested_chain(const World& w, int depth) {
    if (depth < 1) throw PreconditionViolated("nested_chain requires depth >= 1");
    std::vector<World> chain{w};
    for (int i = 0; i < depth; ++i)
        chain.emplace_back(w.center, chain.back().step * Hyper::eps());
    return chain;
}

Hyper monad_world_witness(const World& w) {
    Hyper zero;
    if (!ww_contains(w, zero)) return zero;  // 0 is infinitesimal, not in w
    if (w.step.classify() == MagnitudeClass::Infinitesimal) {
        // w misses part of monad(0): w^(d/2) with d = deg(step) < 0 is
        // infinitesimal but infinitely many steps away from the center.
        return Hyper::monomial(w.step.degree() / 2);
    }
    // w contains all of monad(0) and more; find a non-infinitesimal member.
    for (int k = 0; k <= 2; ++k) {
        Hyper candidate = w.center + w.step * Hyper::from_rational(k);
        if (!is_infinitesimal(candidate)) return candidate;
    }
    // center, center+step, center+2*step cannot all be infinitesimal when
    // the step is not
    throw PreconditionViolated("unreachable witness case");
}

}  // namespace hyperfield
