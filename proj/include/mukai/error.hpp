#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mukai {

/// Error with a stable machine-readable code next to the human message.
/// Codes in use: "schema", "non-hermitian", "d-mismatch", "bad-shape",
/// "bad-index", "bad-exponent", "parse", "discriminant-mismatch",
/// "ground-mismatch", "division-by-zero", "bad-model", "zero-cycle",
/// "bad-rounds".
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)),
          message_(std::move(message))
    {}

    const std::string &code() const { return code_; }
    const std::string &message() const { return message_; }

private:
    std::string code_;
    std::string message_;
};

} // namespace mukai
