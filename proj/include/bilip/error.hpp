#pragma once

#include <stdexcept>
#include <string>

namespace bilip {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (polynomial or problem file); carries a position.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

// A caller violated an operation's contract (ring mismatch, point off the
// variety, rank deficiency, ...).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// The configured step or wall-clock budget was exhausted.  Distinct from a
// mathematical failure: the computation was cut short, not wrong.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace bilip
