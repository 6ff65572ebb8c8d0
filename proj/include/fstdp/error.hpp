#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fstdp {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller handed us something outside an operation's domain.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class CalibrationError : public Error {
public:
    CalibrationError(const std::string& what, double min_rate, double max_rate)
        : Error(what), min_rate_(min_rate), max_rate_(max_rate) {}

    // Output rates (Hz) reachable within the search bracket.
    double min_rate() const { return min_rate_; }
    double max_rate() const { return max_rate_; }

private:
    double min_rate_;
    double max_rate_;
};

class UndefinedCorrelation : public Error {
public:
    using Error::Error;
};

class DegenerateCondition : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ConflictError : public Error {
public:
    using Error::Error;
};

// Config validation failure; the message starts with the offending field path.
class ValidationError : public Error {
public:
    ValidationError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace fstdp
