#pragma once

#include <stdexcept>
#include <string>

namespace multider {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live over different coefficient fields (e.g. Q(zeta_3) vs Q(zeta_4)).
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& what) : Error(what) {}
};

/// Operands live over different variable sets.
struct VarMismatch : Error {
    explicit VarMismatch(const std::string& what) : Error(what) {}
};

/// Division by zero, inverse of zero, or a zero divisor argument.
struct ZeroDivisor : Error {
    explicit ZeroDivisor(const std::string& what) : Error(what) {}
};

/// The formal antiderivative was applied to a term with t-exponent -1.
struct LogarithmicTerm : Error {
    explicit LogarithmicTerm(const std::string& what) : Error(what) {}
};

/// A substitution would create a genuine pole (negative power of a non-monomial).
struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

/// An image that must be polynomial failed its exact-division requirement.
struct NotPolynomialImage : Error {
    explicit NotPolynomialImage(const std::string& what) : Error(what) {}
};

/// Parameters outside the domain an operation is defined on.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Malformed text input.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace multider
