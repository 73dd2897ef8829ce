#pragma once

#include <stdexcept>
#include <string>

namespace taildep {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or unusable input data (bad CSV, ties under a forbidding
// policy, dimension out of range).
struct DataError : Error {
    using Error::Error;
};

// Invalid parameter combinations (k out of range, infeasible structure
// configuration, bad CLI flags).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace taildep
