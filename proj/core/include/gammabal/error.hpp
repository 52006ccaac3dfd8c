#ifndef GAMMABAL_ERROR_HPP
#define GAMMABAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gammabal {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A mathematical argument is outside the function's domain (x < 0, alpha < 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Invalid hyperparameter or option combination.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The user's data cannot be processed as requested.
class DataError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public DataError {
public:
    using DataError::DataError;
};

class EmptyClassError : public DataError {
public:
    using DataError::DataError;
};

class TooFewMinorityError : public DataError {
public:
    using DataError::DataError;
};

class TooFewSamplesError : public DataError {
public:
    using DataError::DataError;
};

class UndefinedMetricError : public DataError {
public:
    using DataError::DataError;
};

/// Malformed file content; carries a 1-based line number when known.
class ParseError : public DataError {
public:
    ParseError(const std::string& msg, std::size_t line)
        : DataError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Structurally valid file that violates the expected schema.
class SchemaError : public DataError {
public:
    SchemaError(const std::string& msg, std::size_t line)
        : DataError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    explicit SchemaError(const std::string& msg) : DataError(msg), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gammabal

#endif
