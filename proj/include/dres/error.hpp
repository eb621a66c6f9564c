#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dres {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violated the documented contract of an operation.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed; this indicates a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

/// A desk-scale search bound (root scan, trial division) was exceeded.
class ScaleLimitError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const char* msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace detail
}  // namespace dres
