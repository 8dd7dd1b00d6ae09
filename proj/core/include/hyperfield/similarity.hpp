#ifndef HYPERFIELD_SIMILARITY_HPP
#define HYPERFIELD_SIMILARITY_HPP

#include <utility>
#include <vector>

#include "hyperfield/hyper.hpp"

namespace hyperfield {

// t -> 1/t, from the infinitely large elements onto the nonzero
// infinitesimals; order reversing on each sign component.
Hyper reciprocal_map(const Hyper& x);

// t -> 1/t + t0, defined for |t| >= u; lands in
// [t0 - 1/u, t0 + 1/u] minus {t0}.
Hyper translated_reciprocal(const Hyper& t, const Hyper& t0, const Hyper& u);

/// Classification of the target interval J = [t0 - 1/u, t0 + 1/u] \ {t0}
/// by the magnitude classes of t0 and u. Nine cases collapse to six
/// distinct outcomes (4->1, 5->2, 6->3). The interval length is 2/u.
struct IntervalCase {
    int case_id;     // 1..9
    int outcome_id;  // 1..6
    bool subset_of_gal0;
    bool contains_gal0_minus_center;
    bool disjoint_from_gal0;
    bool intersects_gal0;
    MagnitudeClass length_class;
};

IntervalCase interval_case(const Hyper& t0, const Hyper& u);

// The nine canonical (t0, u) inputs, one per case, in case order.
std::vector<std::pair<Hyper, Hyper>> canonical_case_inputs();

}  // namespace hyperfield

#endif
