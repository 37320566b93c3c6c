#pragma once

#include <stdexcept>
#include <string>

namespace lsl {

/// Runtime failure with a stable machine-readable code (e.g. "degenerate-metric").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace lsl
