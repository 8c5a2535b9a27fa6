#pragma once

#include <stdexcept>
#include <string>

namespace toeplitz {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input or a violated precondition (maps to CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

// A factor that must be nonzero vanished: division by zero, a Z pole,
// a pole of the symbol on the evaluation point.
class SingularError : public Error {
public:
    using Error::Error;
};

// Input outside the supported class (coincident poles, unequal set sizes
// where the closed forms need equal ones, ...).
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Floating overflow, failed eigensolver, unreachable truncation bound.
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace toeplitz
