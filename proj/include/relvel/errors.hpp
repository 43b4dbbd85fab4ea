#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace relvel {

/// Base class for errors in the physics domain (CLI maps these to exit code 3).
/// `name()` is the stable machine-readable identifier printed on stderr.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// Input velocity at or beyond the speed of light (or past the acceptance margin).
class Superluminal : public DomainError {
public:
    explicit Superluminal(const std::string& what) : DomainError("Superluminal", what) {}
};

/// Two velocities with different light-speed contexts were combined.
class MixedContext : public DomainError {
public:
    explicit MixedContext(const std::string& what) : DomainError("MixedContext", what) {}
};

/// A composition denominator fell below the singularity tolerance.
class DegenerateDenominator : public DomainError {
public:
    explicit DegenerateDenominator(const std::string& what)
        : DomainError("DegenerateDenominator", what) {}
};

/// A complex vector was used where a real velocity is required.
class NonRealVelocity : public DomainError {
public:
    explicit NonRealVelocity(const std::string& what) : DomainError("NonRealVelocity", what) {}
};

}  // namespace relvel
