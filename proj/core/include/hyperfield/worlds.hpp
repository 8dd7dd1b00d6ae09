#ifndef HYPERFIELD_WORLDS_HPP
#define HYPERFIELD_WORLDS_HPP

#include <vector>

#include "hyperfield/hyper.hpp"

namespace hyperfield {

/// Walkable world around `center` by steps of length `step` (step > 0):
/// the points reachable from the center in finitely many steps.
struct World {
    Hyper center;
    Hyper step;
    World(Hyper center, Hyper step);
};

enum class WorldRelation { Same, Disjoint, FirstInsideSecond, SecondInsideFirst };

// Overlapping-but-not-nested cannot occur: two intersecting worlds are
// either equal or one is an infinitesimal part of the other.
WorldRelation ww_relation(const World& w1, const World& w2);

bool ww_contains(const World& w, const Hyper& s);

// Step-pair taxonomy for 0 < v <= u, indexed 1..6.
enum class StepSituation {
    BothInfinitesimal = 1,
    FiniteOverInfinitesimal = 2,
    BothFinite = 3,
    InfiniteOverInfinitesimal = 4,
    InfiniteOverFinite = 5,
    BothInfinite = 6,
};

StepSituation step_situation(const Hyper& u, const Hyper& v);

// Order isomorphism onto WW(0,1): s -> (s - center)/step.
// Throws NotMember when s is outside the world.
Hyper ww_map_to_unit(const World& w, const Hyper& s);

// Pairwise nesting check with membership probes at center + k*step of the
// inner world, k in -probes/2 .. probes/2.
bool is_nesting(const std::vector<World>& family, int probes);

// W0 = w, W_{i+1} = same center, step scaled by eps; k+1 worlds, each
// strictly inside the previous.
std::vector<World> nested_chain(const World& w, int depth);

// An element of the symmetric difference of monad(0) and w; one always
// exists because no walkable world equals the monad of 0.
Hyper monad_world_witness(const World& w);

}  // namespace hyperfield

#endif
