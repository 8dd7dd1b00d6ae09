#ifndef HYPERFIELD_LIMITS_HPP
#define HYPERFIELD_LIMITS_HPP

#include <functional>
#include <optional>

#include "hyperfield/hyper.hpp"

namespace hyperfield {

/// Limit of the sequence n -> x(n) for x a rational function of n
/// (integer exponents only).
struct LimitResult {
    enum class Kind { Converges, DivergesPlus, DivergesMinus };
    Kind kind;
    Rational limit;  // meaningful only when kind == Converges

    bool converges() const { return kind == Kind::Converges; }
};

LimitResult ns_limit(const Hyper& x);

// Exact value of the sequence at n >= 0, or nullopt where the
// denominator vanishes. Representation-faithful: no reduction is applied.
std::optional<Rational> sequence_value(const Hyper& x, const Int& n);

using CancelCheck = std::function<bool()>;

// Minimal m such that |x(n) - L| <= eps for all n >= m, with undefined
// positions counting as violations. Requires ns_limit(x) = Converges(L).
Int epsilon_index(const Hyper& x, const Rational& L, const Rational& eps,
                  const CancelCheck& cancelled = {});

// Minimal k such that |x(n) - x(m)| <= eps for all n, m >= k.
Int cauchy_index(const Hyper& x, const Rational& eps,
                 const CancelCheck& cancelled = {});

}  // namespace hyperfield

#endif
