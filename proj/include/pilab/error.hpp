#ifndef PILAB_ERROR_HPP
#define PILAB_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pilab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (polynomial, field literal, catalog, algebra file).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

/// Two operands belong to different fields or ambient algebras.
struct MismatchError : Error {
    using Error::Error;
};

/// An enumeration or construction exceeded its configured size cap.
struct CapError : Error {
    using Error::Error;
};

/// A lower-bound strategy could not certify the requested answer.
struct InconclusiveError : Error {
    using Error::Error;
};

/// A computation contradicted a proved statement; always a hard failure.
struct CertificationError : Error {
    using Error::Error;
};

}  // namespace pilab

#endif
