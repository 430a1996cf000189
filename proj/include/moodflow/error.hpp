#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace moodflow {

/// Error categories, matching the CLI exit codes: usage=1, data=2, internal=3.
enum class ErrorKind { Usage = 1, Data = 2, Internal = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& msg) {
    throw Error(ErrorKind::Usage, msg);
}
[[noreturn]] inline void throw_data(const std::string& msg) {
    throw Error(ErrorKind::Data, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
    throw Error(ErrorKind::Internal, msg);
}

} // namespace moodflow
