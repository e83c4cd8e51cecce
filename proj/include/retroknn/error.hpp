#pragma once

#include <stdexcept>
#include <string>

namespace retroknn {

enum class ErrorCode {
    invalid_argument,
    io,
    parse,
    validation,
    config,
    training,
    generation,
    format,
    query,
    retrieval,
};

// All library failures surface as Error; the code maps 1:1 onto the C API
// status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

const char* error_code_name(ErrorCode code) noexcept;

}  // namespace retroknn
