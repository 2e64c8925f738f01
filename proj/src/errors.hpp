#pragma once

#include <stdexcept>
#include <string>

namespace tabinv {

// Stable failure categories; the extern-C layer maps these 1:1 onto
// tabinv_status codes.
enum class Status {
    ok = 0,
    parse_error = 1,
    invalid_argument = 2,
    unsupported_shape = 3,
    wrong_inversion_count = 4,
    input_not_standard = 5,
    shape_mismatch = 6,
    budget_exceeded = 7,
    domain_error = 8,
    verify_failed = 9,
    internal_error = 10,
};

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}

    Status status() const { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
    throw Error(status, message);
}

} // namespace tabinv
