#pragma once

#include <stdexcept>
#include <string>

namespace laborshare {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments to a closed-form operation (rank fraction outside [0,1], ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Attenuation denominator 1 - k*(mu - mu0) is not positive.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Attenuated ratio exceeds 1: the automation fraction would leave [0,1].
class RangeError : public Error {
public:
    using Error::Error;
};

// Explicit Euler step size too large: dt * delta >= 1.
class StabilityError : public Error {
public:
    using Error::Error;
};

// Loss became non-finite during fitting, or a statistic is undefined
// (zero variance, all-equal abscissae).
class NumericError : public Error {
public:
    using Error::Error;
};

// Parse, validation, alignment or manifest problems. Messages carry the
// file and line where that makes sense.
class DataError : public Error {
public:
    using Error::Error;
};

} // namespace laborshare
