#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

// Error taxonomy mirrors the CLI exit codes: config errors exit 2,
// cap violations exit 3, internal invariant violations exit 4.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace lrc
