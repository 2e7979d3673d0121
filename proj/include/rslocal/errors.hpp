#pragma once

#include <stdexcept>
#include <string>

namespace rslocal {

/// Bad run configuration or violated pipeline precondition (CLI exit code 2).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Refusal: the request is outside an operation's documented domain
/// (enumeration bounds, brute-force bounds, tableaux weight bound).
struct UnsupportedDomainError : std::runtime_error {
    explicit UnsupportedDomainError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A checked internal identity failed. Never expected on valid inputs
/// (CLI exit code 4).
struct InternalInvariantError : std::logic_error {
    explicit InternalInvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace rslocal
