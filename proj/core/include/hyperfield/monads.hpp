#ifndef HYPERFIELD_MONADS_HPP
#define HYPERFIELD_MONADS_HPP

#include "hyperfield/hyper.hpp"

namespace hyperfield {

// x and y differ by an infinitesimal.
bool same_monad(const Hyper& x, const Hyper& y);

// x and y differ by a finite element.
bool same_galaxy(const Hyper& x, const Hyper& y);

/// Canonical split x = infinite_part + standard_part + infinitesimal_part.
/// infinite_part carries only positive-exponent monomials (0 when x is
/// finite); the exponent-0 coefficient of the quotient is the standard part.
struct Decomposition {
    Hyper infinite_part;
    Rational standard_part;
    Hyper infinitesimal_part;
};

Decomposition decompose(const Hyper& x);

}  // namespace hyperfield

#endif
