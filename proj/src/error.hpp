#pragma once

#include <stdexcept>
#include <string>

namespace scx {

enum class ErrorCode {
    InvalidArgument,
    Io,
    Parse,
    Config,
    Numeric,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline Error invalid_argument(const std::string& msg) { return Error(ErrorCode::InvalidArgument, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorCode::Io, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorCode::Parse, msg); }
inline Error config_error(const std::string& msg) { return Error(ErrorCode::Config, msg); }
inline Error numeric_error(const std::string& msg) { return Error(ErrorCode::Numeric, msg); }

} // namespace scx
