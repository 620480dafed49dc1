#pragma once

#include <stdexcept>
#include <string>

namespace lcsk {

// Misuse of an API: mismatched variable registries, elements over different
// algebras, out-of-range indices, unknown commands.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value failed its construction-time invariants (parity bookkeeping,
// non-commutative multiplication table, ...). The message names a witness.
struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Spec-file error with 1-based source position.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(column_) + ": " + msg),
          line(line_), column(column_) {}
};

} // namespace lcsk
