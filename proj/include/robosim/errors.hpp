#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace robosim {

// Invalid configuration, wiring or input file. `field` names the offending
// config key so the CLI can point at it.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace robosim
