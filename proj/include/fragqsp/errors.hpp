#pragma once

#include <stdexcept>
#include <string>

namespace fragqsp {

/// Thrown when an enumeration would exceed its configured state budget.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a computed object fails a mandatory numerical check
/// (unitarity drift, polynomial condition violation, non-convergence).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed or physically inadmissible run configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fragqsp
