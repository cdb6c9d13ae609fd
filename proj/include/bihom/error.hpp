#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bihom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("matrix is singular") {}
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Index outside 1..dim in an input document.
struct DimensionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line = 0, std::string field = {})
        : Error(line ? "line " + std::to_string(line) + ": " + what
                     : (field.empty() ? what : field + ": " + what)),
          line(line), field(std::move(field)) {}
    std::size_t line;
    std::string field;
};

struct PreconditionFailed : Error {
    using Error::Error;
};

struct UnknownId : Error {
    explicit UnknownId(const std::string& id) : Error("unknown catalog id: " + id) {}
};

struct ObstructionTooLarge : Error {
    using Error::Error;
};

}  // namespace bihom
