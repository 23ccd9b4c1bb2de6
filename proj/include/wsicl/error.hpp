#pragma once

#include <stdexcept>
#include <string>

namespace wsicl {

/// Failure categories surfaced to the CLI as distinct exit codes.
enum class ErrorKind {
    usage,   // bad command line
    config,  // invalid or inconsistent configuration
    io,      // missing/corrupt files, failed writes
    data,    // contract violation on runtime data (shapes, empty masks, ...)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::usage: return "usage";
        case ErrorKind::config: return "config";
        case ErrorKind::io: return "io";
        case ErrorKind::data: return "data";
    }
    return "unknown";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace wsicl
