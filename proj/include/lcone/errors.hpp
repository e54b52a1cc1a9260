#pragma once

#include <stdexcept>
#include <string>

namespace lcone {

// Exit codes used by the CLI. Library code throws the matching exception.
enum class ErrorCode : int {
    Ok = 0,
    Parse = 2,
    Capacity = 3,
    Budget = 4,
    Config = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(ErrorCode::Parse,
                line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(ErrorCode::Parse, msg) {}
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(ErrorCode::Capacity, msg) {}
};

class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& msg) : Error(ErrorCode::Budget, msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(ErrorCode::Config, msg) {}
};

}  // namespace lcone
