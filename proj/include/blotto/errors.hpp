#pragma once

#include <stdexcept>
#include <string>

namespace blotto {

// Base class for all library errors; the CLI maps subtypes to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDimensions : Error {
    using Error::Error;
};

struct InvalidAction : Error {
    using Error::Error;
};

struct InvalidProfile : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

// Raised when the ring indifference matrix has no usable pivot. Carries the
// player count mod 4 as a diagnostic (equal-weight systems are singular
// exactly when 4 divides n).
struct SingularSystem : Error {
    SingularSystem(std::string msg, int n_players)
        : Error(std::move(msg)), n(n_players), n_mod_4(n_players % 4) {}
    int n;
    int n_mod_4;
};

}  // namespace blotto
