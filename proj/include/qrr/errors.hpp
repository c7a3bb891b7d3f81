#pragma once

#include <stdexcept>
#include <string>

namespace qrr {

// Base class for all domain errors raised by the engine.  The CLI maps these
// to exit code 2 (usage/domain error) unless noted otherwise.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Series whose lowest coefficient is not a unit (or which is zero to its order).
struct NotInvertible : Error {
    using Error::Error;
};

// series_equal called on two series whose known windows do not overlap.
struct EmptyWindow : Error {
    using Error::Error;
};

// A Pochhammer factor (1-1) appeared where a unit result was required.
struct ZeroFactor : Error {
    using Error::Error;
};

// Negative-index Pochhammer whose defining quotient has a vanishing factor.
struct UndefinedPochhammer : Error {
    using Error::Error;
};

// Stepwise exact division hit a coefficient that is not divisible.
struct NotDivisible : Error {
    using Error::Error;
};

// An exponent formula produced a half-integer; signals a transcription bug.
struct NonIntegralExponent : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct InvalidLevel : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct InvalidResidue : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

struct UnknownIdentity : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// An internal arithmetic consistency check failed (e.g. Gaussian binomial
// division left a remainder).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace qrr
