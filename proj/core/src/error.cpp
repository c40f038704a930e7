#include "turnseq/error.hpp"

namespace turnseq {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_input: return "invalid input";
        case ErrorCode::degenerate_position: return "degenerate position";
        case ErrorCode::degenerate_mean: return "degenerate mean";
        case ErrorCode::instance_too_large: return "instance too large";
        case ErrorCode::io: return "i/o error";
    }
    return "unknown error";
}

}  // namespace turnseq
