#ifndef TRAJCLUSTER_ERROR_HPP
#define TRAJCLUSTER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace trajcluster {

enum class Status {
    ok = 0,
    io_error = 1,
    parse_error = 2,
    validation_error = 3,
    invalid_argument = 4,
    domain_error = 5,
    not_found = 6,
    internal_error = 7,
};

/// Exception carrying a coarse status code; the C boundary maps it to tc_status.
class Error : public std::runtime_error {
public:
    Error(Status status, std::string message)
        : std::runtime_error(std::move(message)), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status status, const std::string& message) {
    throw Error(status, message);
}

} // namespace trajcluster

#endif
