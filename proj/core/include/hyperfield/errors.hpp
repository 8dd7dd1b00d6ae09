#ifndef HYPERFIELD_ERRORS_HPP
#define HYPERFIELD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperfield {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct NonIntegralExponent : Error {
    NonIntegralExponent() : Error("exponent does not clear to an integer") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NotFinite : Error {
    NotFinite() : Error("element is infinitely large") {}
};

struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct NotMember : Error {
    NotMember() : Error("element is not a member of the world") {}
};

struct NotConvergentToL : Error {
    NotConvergentToL() : Error("sequence does not converge to the given limit") {}
};

struct EpsNotPositive : Error {
    EpsNotPositive() : Error("epsilon must be positive") {}
};

struct NotAFilter : Error {
    NotAFilter() : Error("family is not a filter") {}
};

struct IsUltrafilter : Error {
    IsUltrafilter() : Error("order is total: the filter is an ultrafilter") {}
};

struct BudgetExceeded : Error {
    BudgetExceeded() : Error("universe too large for exhaustive enumeration") {}
};

struct FrechetNeedsInfinite : Error {
    FrechetNeedsInfinite() : Error("the cofinite filter requires an infinite universe") {}
};

struct Cancelled : Error {
    Cancelled() : Error("scan cancelled by caller") {}
};

// Parse errors carry a 0-based source position.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct SyntaxError : ParseError {
    using ParseError::ParseError;
};

struct ExponentNotRational : ParseError {
    explicit ExponentNotRational(std::size_t pos)
        : ParseError("exponent must be a rational literal", pos) {}
};

struct PowerBaseNotOmega : ParseError {
    explicit PowerBaseNotOmega(std::size_t pos)
        : ParseError("'^' applies only to w or eps", pos) {}
};

}  // namespace hyperfield

#endif
