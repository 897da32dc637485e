#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

// Base for every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
    const char* kind() const noexcept override { return "division_by_zero"; }
};

// A value violates a type invariant or an operation precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid_argument"; }
};

class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "parse_error"; }
};

// Integer result does not fit the 64-bit output type.
class Overflow : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "overflow"; }
};

} // namespace nodal
