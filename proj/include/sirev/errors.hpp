#pragma once

#include <stdexcept>
#include <string>

namespace sirev {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation requested outside the declared interval or too close to a pole.
struct OutOfDomain : Error {
    using Error::Error;
};

struct DuplicateRoot : Error {
    using Error::Error;
};

struct SameIndex : Error {
    using Error::Error;
};

// All amplitude parameters vanish: the profile would be identically affine,
// which collapses to a constant-curvature metric.
struct DegenerateSpec : Error {
    using Error::Error;
};

// Closed-form integral coefficients exist only when F has simple zeroes.
struct NotSimple : Error {
    using Error::Error;
};

struct ConstraintViolated : Error {
    using Error::Error;
};

struct InversionFailure : Error {
    using Error::Error;
};

struct FitFailure : Error {
    using Error::Error;
};

struct StepFailure : Error {
    using Error::Error;
};

struct ConfigError : Error {
    ConfigError(int line, const std::string& field, const std::string& what)
        : Error("config:" + std::to_string(line) + ": " + field + ": " + what),
          line(line), field(field) {}
    int line;
    std::string field;
};

}  // namespace sirev
