#pragma once

#include <stdexcept>
#include <string>

namespace sbn {

// Malformed SBN input. `code` is a stable machine-readable identifier,
// e.g. "UnterminatedLiteral", "DanglingNodeRef", "OddEdgeTokens".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string code, const std::string& message, int line = 0, int column = 0)
        : std::runtime_error(message), code_(std::move(code)), line_(line), column_(column) {}

    const std::string& code() const noexcept { return code_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string code_;
    int line_;
    int column_;
};

class NotSerializableError : public std::runtime_error {
public:
    explicit NotSerializableError(const std::string& message) : std::runtime_error(message) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace sbn
