#pragma once

#include <stdexcept>
#include <string>

namespace mfdr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad input: wrong weight, odd Bernoulli index, non-prime p, ...
class DomainError : public Error {
public:
    using Error::Error;
};

class GradingError : public DomainError {
public:
    using DomainError::DomainError;
};

// The series is not the expansion of an element of O(X) of the given weight.
class NotInRingError : public DomainError {
public:
    using DomainError::DomainError;
};

// A window is too short or two windows do not overlap.
class WindowError : public Error {
public:
    using Error::Error;
};

class UnderdeterminedError : public WindowError {
public:
    using WindowError::WindowError;
};

// Numerical budget (terms, subdivisions) exhausted before reaching the requested precision.
class ConvergenceError : public WindowError {
public:
    using WindowError::WindowError;
};

// Two independent routes disagreed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace mfdr
