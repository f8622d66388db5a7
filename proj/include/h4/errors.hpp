#pragma once

#include <stdexcept>
#include <string>

namespace h4 {

/// Base for every precondition violation; the CLI maps these to exit code 2.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Quartic (or cubic/quadratic) form is negative where a real root is required.
class NegativeFormError : public DomainError {
public:
    explicit NegativeFormError(const std::string& what) : DomainError(what) {}
};

/// Spatial offset is not inside the open ball r < T.
class OutsideDomainError : public DomainError {
public:
    explicit OutsideDomainError(const std::string& what) : DomainError(what) {}
};

/// Surface interval fell outside [0, T^4]; the offset is causally unreachable.
class OutsideCausalRegionError : public DomainError {
public:
    explicit OutsideCausalRegionError(const std::string& what) : DomainError(what) {}
};

/// Velocity on or outside the light cone where a subluminal one is required.
class SuperluminalError : public DomainError {
public:
    explicit SuperluminalError(const std::string& what) : DomainError(what) {}
};

/// Degenerate configuration (zero denominator, coincident events, ...).
class DegenerateError : public DomainError {
public:
    explicit DegenerateError(const std::string& what) : DomainError(what) {}
};

/// Bad run configuration (grid shape, node cap, option combinations).
class ConfigError : public DomainError {
public:
    explicit ConfigError(const std::string& what) : DomainError(what) {}
};

/// File system failure; the CLI maps this to exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace h4
