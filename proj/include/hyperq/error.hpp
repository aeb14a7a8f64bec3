#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hyperq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameter outside the operation's domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// A Gamma argument or a denominator Pochhammer hits a non-positive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class IndexError : public DomainError {
public:
    using DomainError::DomainError;
};

// Series or quadrature gave up; best_estimate holds the last partial value.
class NoConvergenceError : public Error {
public:
    NoConvergenceError(const std::string& what, std::complex<double> best)
        : Error(what), best_estimate(best) {}
    std::complex<double> best_estimate;
};

}  // namespace hyperq
