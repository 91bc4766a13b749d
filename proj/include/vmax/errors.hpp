#pragma once

#include <stdexcept>
#include <string>

namespace vmax {

// Thrown for inputs outside an operation's mathematical domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown for inconsistent configuration (bad radii, missing history, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vmax
