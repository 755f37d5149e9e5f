#pragma once

#include <stdexcept>
#include <string>

namespace betti {

// Error taxonomy shared across the library.  The CLI maps these onto its
// exit codes: ParseError/DomainError -> 2, CapError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (monomial grammar, ideal/graph files).
struct ParseError : Error {
    using Error::Error;
};

// Operation applied outside its mathematical domain (zero ideal, unit
// ideal, void complex, complete graph, incomplete table, ...).
struct DomainError : Error {
    using Error::Error;
};

// Resource cap exceeded (ground size > 63, generator count > 20,
// exhaustive enumeration over too large a ground set).
struct CapError : Error {
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct ArithmeticError : Error {
    using Error::Error;
};

} // namespace betti
