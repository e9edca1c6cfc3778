#pragma once

#include <stdexcept>
#include <string>

namespace hodgkin {

/// Base of all errors raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (type strings, flags). CLI exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

/// A guard or search bound was reached. CLI exit code 3.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A computed object failed one of its defining checks. CLI exit code 2.
class CertificationError : public Error {
public:
    CertificationError(std::string check, std::string witness)
        : Error(check + ": " + witness), check_(std::move(check)), witness_(std::move(witness))
    {
    }
    const std::string& check() const { return check_; }
    const std::string& witness() const { return witness_; }

private:
    std::string check_;
    std::string witness_;
};

/// An operation was called outside its contract.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal invariant broke (e.g. inexact division in a Demazure operator).
class DefectError : public Error {
public:
    using Error::Error;
};

}  // namespace hodgkin
