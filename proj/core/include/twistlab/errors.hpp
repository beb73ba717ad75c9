#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class PoleError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Raised when an operation would leave the polynomial-exponential class.
class NotInClass : public Error {
public:
    using Error::Error;
};

class ChartMismatch : public Error {
public:
    using Error::Error;
};

class UnknownCoordinate : public Error {
public:
    using Error::Error;
};

class BasisMismatch : public Error {
public:
    using Error::Error;
};

// A decomposition or inverse hit the singular locus.
class NotInImage : public Error {
public:
    using Error::Error;
};

// An input precondition that is itself a verifiable property failed.
class PreconditionFailed : public Error {
public:
    using Error::Error;
};

}  // namespace twistlab
