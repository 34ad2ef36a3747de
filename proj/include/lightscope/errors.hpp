#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lightscope {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed config, unknown keys, invalid CLI usage.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Numerical failure during evaluation.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NonFiniteIntegrand : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class WindowTooNarrow : public Error {
public:
    using Error::Error;
};

class OverlapOutOfRange : public DomainError {
public:
    using DomainError::DomainError;
};

/// One violated inequality `lhs >= rhs`.
struct Violation {
    std::string constraint;
    std::string lhs_name;
    double lhs = 0.0;
    std::string rhs_name;
    double rhs = 0.0;
    bool overridable = false;

    std::string describe() const {
        return constraint + ": " + lhs_name + " = " + std::to_string(lhs) + " < " + rhs_name +
               " = " + std::to_string(rhs);
    }
};

class RegimeViolation : public ConfigError {
public:
    explicit RegimeViolation(std::vector<Violation> violations)
        : ConfigError(join(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<Violation>& v) {
        std::string msg = "regime violation";
        for (const auto& item : v) {
            msg += "; " + item.describe();
        }
        return msg;
    }

    std::vector<Violation> violations_;
};

}  // namespace lightscope
