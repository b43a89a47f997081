#pragma once

#include <stdexcept>
#include <string>

namespace perfmatrix {

/// Base for every error raised by the library. `kind()` is a stable tag
/// used by the CLI when mapping failures to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// A record violates a mathematical invariant (impossible data).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error("ValidationError", message) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class DuplicateEntity : public Error {
public:
    explicit DuplicateEntity(const std::string& message) : Error("DuplicateEntity", message) {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& message) : Error("LengthMismatch", message) {}
};

/// Zero variance, too few samples, or a perfect correlation where a
/// finite statistic is required.
class DegenerateInput : public Error {
public:
    explicit DegenerateInput(const std::string& message) : Error("DegenerateInput", message) {}
};

class UnknownIndicator : public Error {
public:
    explicit UnknownIndicator(const std::string& message) : Error("UnknownIndicator", message) {}
};

class JoinError : public Error {
public:
    explicit JoinError(const std::string& message) : Error("JoinError", message) {}
};

} // namespace perfmatrix
