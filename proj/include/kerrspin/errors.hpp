#pragma once

#include <stdexcept>
#include <string>

namespace kerrspin {

/// Raised when an evaluation point or state leaves the domain of validity
/// (interior region, poles, forbidden regions, degenerate frames).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised for malformed or inconsistent run configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kerrspin
