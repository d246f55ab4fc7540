#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pdiv {

// Domain-level failure with a machine-readable kind. The kind strings are
// stable and surface in CLI error reports (error.kind).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Malformed input (session file, element syntax). Maps to exit code 1.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw DomainError(kind, msg);
}

}  // namespace pdiv
