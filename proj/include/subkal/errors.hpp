#pragma once
#include <stdexcept>
#include <string>

namespace subkal {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values (orders out of range, negative counts, length mismatches).
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

// A scenario or operation precondition is violated (sign conditions, F(0) != 0, ...).
class InvalidConfiguration : public Error {
public:
    explicit InvalidConfiguration(const std::string& msg) : Error(msg) {}
};

// Near-singular G(x0) in the pointwise estimator.
class DegenerateConfiguration : public Error {
public:
    explicit DegenerateConfiguration(const std::string& msg) : Error(msg) {}
};

// Linear algebra failure, NaN propagation, nu-doubling cap exceeded.
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& msg) : Error(msg) {}
};

} // namespace subkal
