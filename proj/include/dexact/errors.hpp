#pragma once

#include <stdexcept>
#include <string>

namespace dexact {

/// Malformed quiver, orientation word, vertex or interval.
class QuiverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// MAR-layer entry points require n >= 3.
class MarDomainError : public std::invalid_argument {
public:
    explicit MarDomainError(int n)
        : std::invalid_argument("maximal almost rigid theory requires n >= 3 (got n = " + std::to_string(n) + ")")
    {
    }
};

/// A query whose precondition fails (e.g. admissibility of a zero Ext group).
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Failures inside the linear-algebra oracle: length caps, brick violations,
/// undecomposable residues, shape mismatches.
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dexact
