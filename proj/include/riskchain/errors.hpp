#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riskchain {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad configuration: invalid profile, rule file, catalog, or thresholds.
/// The CLI maps this to exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Input violates an operation's domain contract. CLI exit code 1.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// An operation was asked to work on degenerate input (e.g. an empty
/// factor list) for which no meaningful result exists.
class DegenerateInputError : public DomainError {
public:
    explicit DegenerateInputError(const std::string& what) : DomainError(what) {}
};

/// Lookup of a key that is not present; the message lists near misses.
class NotFoundError : public DomainError {
public:
    explicit NotFoundError(const std::string& what) : DomainError(what) {}
};

/// Source text could not be lexed (unterminated comment or string).
class LexError : public DomainError {
public:
    LexError(const std::string& what, std::size_t line)
        : DomainError(what + " at line " + std::to_string(line)), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Input bytes are not valid UTF-8.
class InputEncodingError : public DomainError {
public:
    InputEncodingError(const std::string& what, std::size_t byte_offset)
        : DomainError(what + " at byte offset " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

} // namespace riskchain
