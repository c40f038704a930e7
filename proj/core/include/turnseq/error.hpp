#pragma once

#include <stdexcept>
#include <string>

namespace turnseq {

enum class ErrorCode {
    invalid_input,
    degenerate_position,
    degenerate_mean,
    instance_too_large,
    io,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI, mostly) can tell bad input from bad geometry.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace turnseq
