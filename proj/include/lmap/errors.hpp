#pragma once

#include <stdexcept>
#include <string>

namespace lmap {

// Base for every failure the library reports. Each subclass corresponds to one
// named outcome of an operation so callers (and the CLI) can map them to exit
// codes without string matching.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
public:
    using Error::Error;
};

class NotInCone : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotApplicable : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    enum class Reason { NonzeroConstant, Symmetry };

    InvalidPair(Reason reason, const std::string& what) : Error(what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

class InvalidPresentation : public Error {
public:
    using Error::Error;
};

class ConditionsNotMet : public Error {
public:
    using Error::Error;
};

class ConstructionFailed : public Error {
public:
    using Error::Error;
};

class WitnessInvalid : public Error {
public:
    using Error::Error;
};

class KindMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// Malformed or schema-violating serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Raised when an internal self-check fails. Reaching one indicates a bug.
class InternalVerificationFailure : public Error {
public:
    using Error::Error;
};

}  // namespace lmap
