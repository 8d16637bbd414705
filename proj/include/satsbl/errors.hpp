#pragma once

#include <stdexcept>
#include <string>

namespace satsbl {

/// Thrown when a linear system stays non-SPD after jitter escalation.
/// Callers running Monte-Carlo trials treat this as a failed trial.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid study configuration; `field` is the dotted path of the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace satsbl
