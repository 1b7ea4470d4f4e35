#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// arithmetic between coefficients declared over different parameter sets
struct ContextMismatch : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct BoundExceeded : Error {
    using Error::Error;
};

struct DeformationError : Error {
    using Error::Error;
};

struct InexactDivision : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

}  // namespace weylkit
