#pragma once

#include <stdexcept>
#include <string>

namespace lipcoh {

// Bad scenario/group wiring: mismatched group specs, unparsable config, an
// action whose quotient is not finite in the degrees we need, etc.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural precondition failed (non-complex input, degree mismatch,
// stabilizer-noninvariant coefficient, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was hit (ball enumeration, constraint count).
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// The generic point landed on an affine span it must avoid.  Callers re-pick
// the point from the seeded stream and restart the scenario.
struct GenericityViolation : std::runtime_error {
    explicit GenericityViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised after the re-pick budget is exhausted.
struct GenericityExhausted : std::runtime_error {
    explicit GenericityExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// A coefficient-module value fell outside the truncation radius of a solved
// homomorphism; the caller should re-solve at a larger radius.
struct RadiusError : std::runtime_error {
    explicit RadiusError(const std::string& msg) : std::runtime_error(msg) {}
};

// The integer linear system for a coefficient homomorphism has no solution
// at the given radius.
struct UnsatError : std::runtime_error {
    explicit UnsatError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace lipcoh
