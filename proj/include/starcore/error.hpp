#pragma once

#include <stdexcept>
#include <string>

namespace starcore {

// Base of every error the library throws. Mathematical outcomes that a
// theorem checker is expected to report (a failed hypothesis, a missing
// inverse) are still exceptions at the geninv level; the checkers catch
// them and turn them into report lines.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    SingularMatrix() : Error("matrix is singular") {}
};

class NotIdempotent : public Error {
public:
    NotIdempotent() : Error("p is not idempotent: p^2 != p") {}
};

class NotTriangular : public Error {
public:
    NotTriangular() : Error("matrix is not lower triangular relative to p: p x (1-p) != 0") {}
};

class NoGroupInverse : public Error {
public:
    NoGroupInverse() : Error("no group inverse: rank(A^2) < rank(A)") {}
};

// Carries the name of the first violated hypothesis.
class HypothesisFailed : public Error {
public:
    explicit HypothesisFailed(std::string hypothesis)
        : Error("hypothesis failed: " + hypothesis), hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

class ZeroLambda : public Error {
public:
    ZeroLambda() : Error("lambda must be nonzero") {}
};

class GenerationExhausted : public Error {
public:
    using Error::Error;
};

// A computed result failed its own verification. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace starcore
