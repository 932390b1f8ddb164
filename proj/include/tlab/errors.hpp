#pragma once

#include <stdexcept>
#include <string>

namespace tlab {

// Base for every domain error raised by the library. Callers that only need
// to report can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
public:
    ZeroConstantTerm() : Error("divisor series has zero constant term") {}
};

class NonzeroInnerConstant : public Error {
public:
    NonzeroInnerConstant() : Error("inner series of a composition must vanish at 0") {}
};

class NonzeroConstant : public Error {
public:
    explicit NonzeroConstant(const std::string& what) : Error(what) {}
};

class InvalidParameters : public Error {
public:
    explicit InvalidParameters(const std::string& what) : Error(what) {}
};

class NoInverseAvailable : public Error {
public:
    NoInverseAvailable() : Error("custom generator has no inverse series") {}
};

class NotNormalized : public Error {
public:
    explicit NotNormalized(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t expected, std::size_t got)
        : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

class ConditionNotMet : public Error {
public:
    explicit ConditionNotMet(const std::string& what) : Error(what) {}
};

class BoundViolated : public Error {
public:
    explicit BoundViolated(const std::string& what) : Error(what) {}
};

class CertificationFailed : public Error {
public:
    explicit CertificationFailed(const std::string& what) : Error(what) {}
};

}  // namespace tlab
