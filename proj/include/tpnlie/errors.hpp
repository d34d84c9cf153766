#ifndef TPNLIE_ERRORS_HPP
#define TPNLIE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tpnlie {

// Structural misuse of the algebra API (wrong ring, wrong arity, bad index).
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RingMismatchError : StructuralError {
    using StructuralError::StructuralError;
};

struct ArityError : StructuralError {
    using StructuralError::StructuralError;
};

// Text or JSON input that does not conform to the documented formats.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line(0), column(0) {}

    std::size_t line;
    std::size_t column;
};

} // namespace tpnlie

#endif
