#pragma once

#include <stdexcept>
#include <string>

namespace solk {

// Exit-code contract: 0 ok, 1 usage/parse, 2 axiom failure, 3 resource cap.

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(std::string msg, int ln = 0, int col = 0)
        : std::runtime_error(std::move(msg)), line(ln), column(col) {}
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a configured cap (word length, iteration count, precision
// refinement) is exhausted before the requested result is reached.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace solk
