#pragma once

#include <stdexcept>
#include <string>

namespace antider {

// Bad user input: malformed config/model documents, parameters outside an
// operation's stated domain, unusable geometry.  CLI exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that an operation must refuse (pole on a fiber, shared
// factor with the defining polynomial, non-unit leading coefficient, ...).
// Also CLI exit code 2: the request cannot be carried out as posed.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive precision / adaptive refinement hit its ceiling without reaching
// the requested certainty.  CLI exit code 3.
struct EscalationError : std::runtime_error {
    explicit EscalationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact invariant that can never legitimately fail was violated
// (e.g. a provably-integer quantity came out fractional).  CLI exit code 1.
struct VerdictError : std::runtime_error {
    explicit VerdictError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace antider
