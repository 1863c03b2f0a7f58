#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symplt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A triangular or LU pivot was zero or non-finite.
class SingularError : public Error {
public:
    SingularError(const std::string& what, std::size_t index)
        : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Cholesky met a nonpositive (or NaN) pivot.
class NotPositiveDefiniteError : public Error {
public:
    NotPositiveDefiniteError(const std::string& what, std::size_t index)
        : Error(what + " (pivot " + std::to_string(index) + ")"), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class SymmetryError : public Error {
public:
    using Error::Error;
};

class StructureError : public Error {
public:
    using Error::Error;
};

/// Input for which the requested quantity is undefined (e.g. the zero matrix).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace symplt
