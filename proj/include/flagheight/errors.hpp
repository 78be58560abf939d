#pragma once

#include <stdexcept>
#include <string>

namespace flagheight {

/// Input violates a hypothesis (bad datum, non-antidominant lambda, ...).
/// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical property that should hold for valid inputs failed.
/// Carries a witness describing the counterexample; CLI exit code 3.
class PropertyViolation : public std::runtime_error {
public:
    PropertyViolation(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

} // namespace flagheight
