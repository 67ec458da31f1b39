#pragma once

#include <stdexcept>
#include <string>

namespace hyp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was called with input that violates its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Floating evaluation left the representable exponent range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// An iterative numerical method did not reach its tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// A search or construction is outside the supported scope.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace hyp
