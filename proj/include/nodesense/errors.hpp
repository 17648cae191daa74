#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace nodesense {

/// Error raised when an operation's input contract is violated.
/// `code()` is a stable machine-readable identifier; the CLI maps any
/// DomainError to exit code 1 and a one-line JSON error on stderr.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace nodesense
