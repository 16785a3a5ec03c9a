#pragma once

#include <stdexcept>
#include <string>

namespace heatsched {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed parameters, negative energies, b <= 0, ...
struct ValidationError : Error {
    using Error::Error;
};

// Scenario file could not be read or decoded.
struct ParseError : Error {
    using Error::Error;
};

// Scenario admits no strictly interior point for the requested program.
struct NoStrictlyFeasiblePoint : Error {
    using Error::Error;
};

// An iterative kernel hit its iteration cap before reaching tolerance.
struct IterationLimitExceeded : Error {
    using Error::Error;
};

// bisect_root was called with f(lo) and f(hi) of the same sign.
struct BracketInvalid : Error {
    using Error::Error;
};

// grid_oracle only handles short horizons.
struct HorizonTooLarge : Error {
    using Error::Error;
};

// Zero cumulative energy prefix makes the high-SINR objective unbounded below.
struct DegenerateBudget : Error {
    using Error::Error;
};

// solve_temperature_limited called on a scenario that is not temperature limited.
struct NotTemperatureLimited : Error {
    using Error::Error;
};

// The line search over hit slots exhausted all candidates (logic error).
struct NoValidHitSlot : Error {
    using Error::Error;
};

struct InfeasibleScenario : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace heatsched
